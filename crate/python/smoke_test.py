"""Smoke test for the compiled `bckcode` extension module.

Build with `cargo build -p bckcode-python --features extension-module`, copy
`target/debug/libbckcode.so` to `bckcode.so` somewhere on `sys.path`, then run
this script.
"""

import bckcode

A = bckcode.Algebra([[0, 0, 0, 0], [1, 0, 0, 1], [2, 1, 0, 2], [3, 3, 3, 0]])
V = ["0110", "0010", "1111", "0001"]


def main():
    report = A.check_axioms()
    assert report["is_bck"], report
    assert A.is_commutative() and not A.is_implicative()
    assert A.canonical_code() == ["1111", "0110", "0010", "0001"]

    star = bckcode.construct_from_code(V)
    assert star.table == [[0, 0, 0, 0], [1, 0, 0, 1], [2, 2, 0, 2], [3, 3, 3, 0]]
    assert star.names == ["w1", "w2", "w3", "w4"]
    assert bckcode.code_similar(A, star)
    assert bckcode.are_isomorphic(A, star) is None
    assert bckcode.verify_roundtrip(V)["exact"]
    assert not bckcode.verify_roundtrip(["1111", "0110", "0011", "0001"])["exact"]

    f = bckcode.pointwise_function_algebra(3)
    assert f.is_implicative() and len(f) == 8
    assert bckcode.Algebra.from_text(f.to_text()) == f

    algebra, lift = bckcode.lift_code(["11110", "10010", "10011", "00000"])
    assert algebra.order == lift["ambient_order"] == 10
    assert lift["contains_source"]

    assert [bckcode.cn_count(n) for n in (3, 4, 5, 6)] == [2, 8, 64, 1024]
    assert len(bckcode.enumerate_cn(4)) == 8
    assert bckcode.omega(3) == ["111", "011", "001"]
    fam, data = bckcode.family_algebra(3)
    assert fam.order == 2 and data["code"] == ["11", "01"]

    census = bckcode.census(4)
    assert census["bound_check"] and census["iso_classes"] >= 8
    assert len(bckcode.enumerate_bck(3)) == census_total(3)

    try:
        bckcode.construct_from_code(["11110", "10010", "10011", "00000"])
    except bckcode.BckError as err:
        assert "not square" in str(err)
    else:
        raise AssertionError("expected BckError")
    try:
        bckcode.Algebra([[0, 1], [1, 0]]).is_commutative()
    except ValueError:
        pass
    else:
        raise AssertionError("expected BckError for a non-BCK table")

    print("bckcode smoke test passed")


def census_total(n):
    return bckcode.census(n)["total_tables"]


if __name__ == "__main__":
    main()

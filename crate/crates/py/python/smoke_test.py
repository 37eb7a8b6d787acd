"""Smoke test for the cyclo_schur_py extension module.

Build the extension and put it on the import path first, e.g.

    cargo build --release -p cyclo-schur-py
    cp target/release/libcyclo_schur_py.so crates/py/python/cyclo_schur_py.so
    python3 crates/py/python/smoke_test.py
"""

import json

import cyclo_schur_py as cs


def main():
    h = cs.HeckeAlgebra(2, 2)
    assert h.dim == 8
    assert h.dim_check() == (8, True)
    assert h.murphy_basis_check() == (8, 8)
    t0, t1 = h.t(0), h.t(1)
    q_relation = t1 * t1
    assert not q_relation.is_zero()
    assert (t0 * t1 * t0 * t1) == (t1 * t0 * t1 * t0)
    assert (t0 * t1).star() == t1 * t0
    assert h.from_json(t1.to_json()) == t1

    shapes = cs.hook_multipartitions([1, 1, 1], [1, 2, 3], 20)
    assert "((2,1,1);(3,2,2,1);(4,3,1))" in shapes

    mods = cs.supermodules([1, 1], [1, 1], 2)
    assert len(mods) == 10
    assert all(m["rank"] >= sum(m["multiplicities"].values()) > 0 for m in mods)

    s = cs.SchurAlgebra([1, 1], [1, 1], 2)
    assert s.dim == s.dimension_formula() == s.basis_rank() == 200
    assert s.cellularity_check()["passed"]
    index, entries = s.gram("((1);(1))")
    assert len(index) == len(entries)
    assert all(d >= 1 for d in s.simple_dims("q=1,Q=1,-1").values())
    duality = s.double_centralizer_check()
    assert duality["commutant_dim"] == 200 and duality["bicommutant_dim"] == 8

    assert all(ok for _, ok in cs.golden_suite())

    try:
        cs.HeckeAlgebra(3, 6)
    except OverflowError:
        pass
    else:
        raise AssertionError("scale limit not enforced")

    print(json.dumps({"ok": True, "schur_dim": s.dim, "duality": duality}, sort_keys=True))


if __name__ == "__main__":
    main()

"""Smoke test for the catalan_py extension module.

Build and run from the repository root:

    cargo build -p catalan-py --features extension-module --release
    cp target/release/libcatalan_py.so python/catalan_py.so
    python3 python/smoke_test.py
"""

import os
import sys
from fractions import Fraction
from math import comb

sys.path.insert(0, os.environ.get("CATALAN_PY_PATH", os.path.dirname(os.path.abspath(__file__))))

import catalan_py as cp


def main():
    assert [cp.catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert cp.catalan(100) == comb(200, 100) // 101
    assert cp.binomial(-1, 3) == -1 and cp.binomial(5, -1) == 0

    assert cp.lhs_identity1(0) == 1
    assert all(cp.lhs_identity1(s) == 0 for s in range(1, 30))
    assert cp.lhs_identity3(10, 4) == cp.rhs_identity3(10, 4)
    assert cp.f_value(7, 3) == Fraction(cp.lhs_identity3(7, 3), comb(7 - 3 - 1, 3))
    assert cp.check_identity("identity2prime", l=6, m=3)["holds"]
    assert cp.check_identity("identity1", s=0)["documented_exception"]

    t = cp.Creature("(1,2)")
    assert t.weight == 3 and str(t.involution()) == "(1,(1,1))"
    assert t.involution().involution() == t
    assert len(cp.enumerate_creatures1(4)) == sum(cp.catalan(i) * comb(i + 1, 4 - i) for i in range(5))
    c = cp.census1(5)
    assert c["fixed_points"] == [] and c["even_leaves"] == c["odd_leaves"]
    assert cp.census3(5, 2)["survivors"] == ["1|22"]

    p = cp.CreaturePair("1|21", 4, 1)
    assert p.is_survivor() and p.involution() is None

    term = cp.Term("(-1)^i*binomial(2*i,i)/(i+1)*binomial(i+1,s-i)", var="i", params=["s"])
    cert = term.gosper()
    assert cert.verify()
    values = cert.definite(0, "s", list(range(0, 12)))
    assert [v for v, _ in values] == [1] + [0] * 11
    assert cp.check_certificate(cert.to_toml("smoke")) == ("verified", "verified")

    try:
        cp.Term("factorial(k)").gosper()
    except cp.NotGosperSummable as e:
        assert "stage" in str(e.args[0])
    else:
        raise AssertionError("factorial(k) should not be Gosper-summable")

    try:
        cp.Term("binomial(k, (")
    except cp.ParseError as e:
        assert "column" in str(e)
    else:
        raise AssertionError("parse error expected")

    rec = cp.zeilberger("binomial(n,k)^2", sumvar="k", recvar="n")
    assert rec.order == 1 and rec.verify()
    assert rec.coefficients == ["-4*n - 2", "n + 1"]

    code, out = cp.run_cli(["verify", "identity1", "--s", "1..50"])
    assert code == 0 and out.strip() == "OK 50/50"

    print("smoke test passed")


if __name__ == "__main__":
    main()

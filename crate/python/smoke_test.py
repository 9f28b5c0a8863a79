"""Smoke test for the moricone extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

from fractions import Fraction

import moricone

POINTS = [
    [3, -1, 3, -4],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 0],
    [-1, 0, -1, 1],
    [1, 0, 1, -1],
    [0, 0, 0, 0],
]


def main():
    p = moricone.Polytope.from_points(POINTS)
    assert p.dim == 4
    assert p.hodge_numbers() == (2, 128)
    assert p.kreuzer().endswith("intpts=1;  Pic=2")
    assert p.divisor_basis([0, 5])[1] == "d2=-3*J1+J2"

    ts = p.triangulations()
    assert [len(t.simplices()) for t in ts] == [9, 8]
    assert sorted(ts[0].sr_ideal()) == ["010011", "101100"]
    for t in ts:
        assert t.intersection_polynomial() == "2*J1^3+108*J2^3+8*J1^2*J2+30*J2^2*J1"
        assert t.genera()[2] == -252
        assert len(t.mori_generators()) == 2

    chi0, chi1, e = ts[0].genera([1, 0, 0, 0, 0, 1])
    assert (chi0, chi1, e) == (Fraction(35, 32), Fraction(143, 32), Fraction(-27, 4))

    quintic = moricone.Polytope.from_weights("5 1 1 1 1 1")
    (t,) = quintic.triangulations()
    assert t.intersection_polynomial() == "5*J1^3"
    assert t.mori_generators() == [[1, 1, 1, 1, 1]]

    (t,) = moricone.Polytope.from_weights("18 1 1 1 6 9").triangulations()
    assert [n for _, n in t.del_pezzos()] == [0]

    try:
        moricone.Polytope.from_points([[2, 0], [0, 1], [-1, -1]])
    except ValueError:
        pass
    else:
        raise AssertionError("non-reflexive input accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()

import itertools
import random

import pytest

from oracles import hilbert_oracle_odd, hilbert_oracle_q2, square_mod_2_15
from wittcert.arith import DomainError, prime_support, squarefree_rep
from wittcert.dyadic import DYADIC_CLASSES, build_model, dyadic_subgroup
from wittcert.localfields import (
    REAL,
    EngineContext,
    LocalField,
    LocalFormClass,
    Place,
    dyadic_square_test,
    form_class_at,
    hilbert_symbol,
    local_aniso_dim,
    local_square_class,
    rationals_at,
)

Q2 = rationals_at(Place(2))
Q3 = rationals_at(Place(3))
Q5 = rationals_at(Place(5))
R = LocalField(REAL)
C = LocalField(REAL, gens=(-1,))


def all_quartic_subgroups():
    out = set()
    for c1, c2 in itertools.combinations(DYADIC_CLASSES[1:], 2):
        sub = dyadic_subgroup([c1, c2])
        if len(sub) == 4:
            out.add(sub)
    return sorted(out, key=sorted)


class TestDyadicModels:
    def test_all_fourteen_extensions_build(self):
        for c in DYADIC_CLASSES[1:]:
            m = build_model(frozenset({1, c}))
            assert m.e * m.f == 2
            assert (m.f == 2) == (c == 5)
        subs = all_quartic_subgroups()
        assert len(subs) == 7
        for sub in subs:
            m = build_model(sub)
            assert m.e * m.f == 4
            assert (m.f == 2) == (5 in sub)

    def test_square_test_matches_kummer(self):
        # Element-level residue search against the Galois-theoretic answer.
        for c in DYADIC_CLASSES[1:]:
            m = build_model(frozenset({1, c}))
            for d in DYADIC_CLASSES:
                assert m.is_square(d) == (d in {1, c})
        for sub in all_quartic_subgroups()[:3]:
            m = build_model(sub)
            for d in DYADIC_CLASSES:
                assert m.is_square(d) == (d in sub)


class TestHilbertSymbolQ2:
    def test_frozen(self):
        assert hilbert_symbol(-1, -1, Q2) == -1
        assert hilbert_symbol(1, 5, Q2) == 1
        assert hilbert_symbol(2, 5, Q2) == -1
        assert hilbert_symbol(-1, 7, Q2) == -1  # x^2 + y^2 = 7 mod 8 unsolvable
        assert hilbert_symbol(-1, -7, Q2) == 1

    def test_exhaustive_vs_residue_oracle(self):
        signed = [s * c for c in DYADIC_CLASSES for s in (1, -1)]
        for a in signed:
            for b in signed:
                assert hilbert_symbol(a, b, Q2) == hilbert_oracle_q2(a, b), (a, b)


class TestHilbertSymbolOdd:
    def test_frozen(self):
        assert hilbert_symbol(2, 5, Q5) == -1
        assert hilbert_symbol(1, 7, Q3) == 1
        assert hilbert_symbol(3, 3, Q3) == -1  # (3,3) = (3,-1) = legendre(-1|3)

    def test_vs_residue_oracle(self):
        rng = random.Random(21)
        for p in (3, 5, 7, 11):
            E = rationals_at(Place(p))
            for _ in range(40):
                a = squarefree_rep(rng.randint(-60, 60) or 1)
                b = squarefree_rep(rng.randint(-60, 60) or 1)
                assert hilbert_symbol(a, b, E) == hilbert_oracle_odd(a, b, p), (p, a, b)


class TestSymbolLaws:
    FIELDS = [
        R, C, Q2, Q3, Q5,
        LocalField(Place(3), gens=(3,), e=2, f=1),
        LocalField(Place(5), gens=(2,), e=1, f=2),
        LocalField(Place(2), gens=(5,), e=1, f=2),
        LocalField(Place(2), gens=(7,), e=2, f=1),
        LocalField(Place(2), gens=(3, 5), e=2, f=2),
        LocalField(Place(2), gens=(2, 7), e=4, f=1),
    ]

    def test_symmetry_bimultiplicativity_antidiagonal(self):
        rng = random.Random(22)
        for _ in range(150):
            a = rng.randint(-40, 40) or 1
            b = rng.randint(-40, 40) or 1
            c = rng.randint(-40, 40) or 1
            for E in self.FIELDS:
                sab = hilbert_symbol(a, b, E)
                assert sab == hilbert_symbol(b, a, E)
                assert hilbert_symbol(a, -a, E) == 1
                assert hilbert_symbol(a * c, b, E) == sab * hilbert_symbol(c, b, E)

    def test_product_formula(self):
        rng = random.Random(23)
        for _ in range(400):
            a = rng.randint(-99, 99) or 1
            b = rng.randint(-99, 99) or 1
            prod = hilbert_symbol(a, b, R)
            for p in sorted(prime_support([a, b])):
                prod *= hilbert_symbol(a, b, rationals_at(Place(p)))
            assert prod == 1, (a, b)

    def test_even_degree_extensions_split_everything(self):
        # Rational symbols restrict trivially to any even-degree completion;
        # here that falls out of residue searches and the tame formula.
        for E in self.FIELDS:
            if E.degree < 2 or E.base.is_real:
                continue
            for a in (-1, 2, -2, 5, 3, -10):
                for b in (-1, 2, 7, -5, 6):
                    assert hilbert_symbol(a, b, E) == 1, (str(E), a, b)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            hilbert_symbol(0, 3, Q2)


class TestLocalSquareClass:
    def test_frozen(self):
        assert local_square_class(4, Q5) == 1
        assert local_square_class(2, Q5) == 2  # least nonresidue mod 5
        assert local_square_class(-1, R) == -1
        assert local_square_class(-1, C) == 1
        assert local_square_class(17, Q2) == 1
        assert local_square_class(5, Q2) == 5

    def test_reduction_modulo_tower_generators(self):
        E = LocalField(Place(2), gens=(5,), e=1, f=2)
        assert local_square_class(5, E) == 1
        assert local_square_class(10, E) == 2
        E7 = LocalField(Place(7), gens=(7,), e=2, f=1)
        assert local_square_class(7, E7) == 1
        assert local_square_class(14, E7) == local_square_class(2, E7)

    def test_agrees_with_dyadic_square_test(self):
        rng = random.Random(24)
        fields = [Q2,
                  LocalField(Place(2), gens=(5,), e=1, f=2),
                  LocalField(Place(2), gens=(14,), e=2, f=1),
                  LocalField(Place(2), gens=(3, 5), e=2, f=2)]
        for _ in range(80):
            a = rng.randint(-100, 100) or 1
            for E in fields:
                assert (local_square_class(a, E) == 1) == dyadic_square_test(a, E), (a, str(E))


class TestDyadicSquareTest:
    def test_frozen(self):
        assert dyadic_square_test(9, Q2)
        assert dyadic_square_test(17, Q2)
        assert not dyadic_square_test(5, Q2)
        assert not dyadic_square_test(2, Q2)
        assert dyadic_square_test(-7, Q2)

    def test_brute_force_agreement(self):
        # Units of height <= 100 against x^2 = u mod 2^15.
        for u in range(-99, 100, 2):
            assert dyadic_square_test(u, Q2) == square_mod_2_15(u), u

    def test_odd_place_rejected(self):
        with pytest.raises(DomainError):
            dyadic_square_test(3, Q5)


class TestLocalAnisoDim:
    def test_frozen(self):
        Q7 = rationals_at(Place(7))
        assert local_aniso_dim(form_class_at((1, -1), Q7), Q7) == 0
        assert local_aniso_dim(form_class_at((1, 1, 1, 1), R), R) == 4
        assert local_aniso_dim(form_class_at((1, 1, 1, 1), Q2), Q2) == 4
        assert local_aniso_dim(form_class_at((1, 1, 1), Q2), Q2) == 3
        assert local_aniso_dim(form_class_at((1, 1, 1, 1), Q5), Q5) == 0
        assert local_aniso_dim(form_class_at((3,), Q3), Q3) == 1

    def test_complex_parity(self):
        assert local_aniso_dim(form_class_at((1, 2, 3), C), C) == 1
        assert local_aniso_dim(form_class_at((1, 2, 3, 5), C), C) == 0

    def test_dim_five_always_isotropic_locally(self):
        rng = random.Random(25)
        for _ in range(60):
            entries = tuple(squarefree_rep(rng.randint(-30, 30) or 1) for _ in range(5))
            for E in (Q2, Q3, Q5):
                assert local_aniso_dim(form_class_at(entries, E), E) <= 3

    def test_split_class_detection(self):
        # aniso dim 0 iff even dim, trivial disc, split hasse (signature 0 at R).
        rng = random.Random(26)
        for _ in range(120):
            entries = tuple(squarefree_rep(rng.randint(-20, 20) or 1)
                            for _ in range(rng.choice([2, 4])))
            for E in (Q2, Q3, Q5, R):
                cls = form_class_at(entries, E)
                dim0 = local_aniso_dim(cls, E) == 0
                hyp_ref = form_class_at(tuple([1, -1] * (len(entries) // 2)), E)
                expected = (cls.disc == hyp_ref.disc and cls.hasse == hyp_ref.hasse
                            and cls.signature == hyp_ref.signature)
                assert dim0 == expected, (entries, str(E))

    def test_invalid_class_rejected(self):
        with pytest.raises(DomainError):
            local_aniso_dim(LocalFormClass(2, 1, 1, signature=5), R)


def test_verification_context_is_independent():
    ctx1 = EngineContext()
    assert hilbert_symbol(-1, -1, Q2, ctx1) == -1
    ctx2 = EngineContext()
    assert not ctx2._symbols
    assert hilbert_symbol(-1, -1, Q2, ctx2) == -1


def test_concurrent_calls_match_sequential():
    # Shared-cache behaviour must be observationally identical to no cache.
    from concurrent.futures import ThreadPoolExecutor

    rng = random.Random(27)
    pairs = [(rng.randint(-60, 60) or 1, rng.randint(-60, 60) or 1) for _ in range(120)]
    fields = [Q2, Q5, LocalField(Place(2), gens=(3, 5), e=2, f=2)]
    sequential_ctx = EngineContext()
    expected = [hilbert_symbol(a, b, E, sequential_ctx)
                for a, b in pairs for E in fields]
    shared = EngineContext()
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(lambda t: hilbert_symbol(t[0], t[1], t[2], shared),
                            [(a, b, E) for a, b in pairs for E in fields]))
    assert got == expected

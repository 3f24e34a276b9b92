"""Seeded property suites shared by the command line and the test-suite.

Every check draws from its own deterministic stream, so results depend only
on the seed and the trial count, never on the order in which suites run.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import sampling as S
from .completion import (
    complete_row_via_excision,
    localize_matrix,
    patch_symplectic,
    verify_completion,
)
from .elementary import (
    LINEAR,
    SYMPLECTIC,
    ElementaryWord,
    PlainGen,
    UnimodularRow,
    elem_generator,
    homotopy_word,
    reduce_to_principal,
    row_reduce_euclidean,
    sigma_index,
    whitehead_word,
    word_eval,
)
from .lifts import (
    lift_alt,
    lift_entries,
    lift_matrix,
    lift_row,
    lift_word,
    localization_compat,
    project,
)
from .matrices import (
    Matrix,
    apply_hom,
    chi,
    det,
    det_cofactor,
    inverse,
    is_relative,
    is_symplectic,
    perp,
    pfaffian,
    sigma,
)
from .rings import (
    QQ,
    ZZ,
    BarSplit,
    CanonicalInclusion,
    Double,
    DoubleU,
    DoubleV,
    EvalAt,
    Excision,
    Ideal,
    IntegersMod,
    Localized,
    Polynomial,
    ProjectPi,
    QuotientEuclidean,
    Ring,
    split_ideal,
    unit_kernel_C,
)
from .steinberg import (
    RELATIONS,
    SteinbergWord,
    esd_transform,
    kernel_check,
    pairing,
    relation_instance,
    relation_word,
    residue_trivial,
    steinberg_phi,
    steinberg_phi_esd,
    symbol_build,
    transvection_generator,
    unit_vector,
)
from .witt import (
    AltRep,
    EquivCertificate,
    check_equiv,
    extract_block,
    hyperbolic_H,
    kernel_of_H_construct,
    pf_section,
    search_equiv,
    whitehead_certificate,
    widen_word,
    witt_inverse_rep,
    witt_perp,
)

#: rows over (Z, <m>) exercised by the relative completion check
CURATED_ROWS = [
    (5, [6, 5, 10]),
    (2, [3, 4, 12]), (2, [7, -6, -8]), (2, [13, 4, 2]), (2, [9, 6, 12, -8]),
    (2, [-9, 2, -4, -8]), (2, [3, 8, 10, 6]), (2, [-1, 0, 0]),
    (3, [13, -12, 9]), (3, [-17, 6, -15]), (3, [-8, 9, -18]), (3, [19, 3, -3, 3]),
    (3, [10, -9, 6, -9]), (3, [13, -15, 3, 12]),
    (5, [-9, 0, 10]), (5, [-24, 25, -10]), (5, [-4, 30, -15]), (5, [11, -10, -30, -25]),
    (5, [16, 30, -25, 0]), (5, [-29, 20, -30, -15]),
]


@dataclass
class CheckResult:
    name: str
    trials: int
    failures: int = 0
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self):
        d = {"check": self.name, "trials": self.trials, "failures": self.failures, "passed": self.passed}
        if self.first_failure:
            d["first_failure"] = self.first_failure
        return d


@dataclass
class SuiteResult:
    name: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {"suite": self.name, "seed": self.seed, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


class _Runner:
    def __init__(self, suite: str, seed: int, trials: Optional[int]):
        self.result = SuiteResult(suite, seed)
        self.seed = seed
        self.override = trials

    def check(self, name: str, default: int, fn: Callable):
        """Run ``fn(rng)`` for the requested number of trials."""
        trials = self.override if self.override is not None else default
        rng = S.rng_for(self.seed, self.result.name, name)
        res = CheckResult(name, trials)
        for k in range(trials):
            try:
                ok = fn(rng)
                detail = None if ok else f"trial {k}"
            except Exception as exc:  # a raised error counts as a failure
                ok, detail = False, f"trial {k}: {type(exc).__name__}: {exc}"
            if not ok:
                res.failures += 1
                res.first_failure = res.first_failure or detail
        self.result.checks.append(res)

    def exhaustive(self, name: str, cases, fn: Callable):
        """Run ``fn(case)`` on every case; the trial override does not apply."""
        cases = list(cases)
        res = CheckResult(name, len(cases))
        for case in cases:
            try:
                ok = fn(case)
                detail = None if ok else f"case {case!r}"
            except Exception as exc:
                ok, detail = False, f"case {case!r}: {type(exc).__name__}: {exc}"
            if not ok:
                res.failures += 1
                res.first_failure = res.first_failure or detail
        self.result.checks.append(res)


# ---------------------------------------------------------------------------
# rings


def _axioms(R: Ring, rng) -> bool:
    x, y, z = S.element(R, rng), S.element(R, rng), S.element(R, rng)
    add, mul, eq = R.add, R.mul, R.eq
    ok = (
        eq(add(add(x, y), z), add(x, add(y, z)))
        and eq(mul(mul(x, y), z), mul(x, mul(y, z)))
        and eq(add(x, y), add(y, x))
        and eq(mul(x, y), mul(y, x))
        and eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))
        and eq(add(x, R.zero), x)
        and eq(mul(x, R.one), x)
        and R.is_zero(add(x, R.neg(x)))
        and eq(R.sub(x, y), add(x, R.neg(y)))
    )
    if ok and R.is_unit(x):
        ok = R.is_one(mul(x, R.inv(x)))
    return ok


def _ring_zoo():
    Z2 = Ideal.of(ZZ, [2])
    Z8 = IntegersMod(8)
    I4 = Ideal.of(Z8, [4])
    F5X = Polynomial(IntegersMod(5))
    return [
        ZZ, QQ, Z8, IntegersMod(7), F5X, Polynomial(ZZ), Polynomial(Z8),
        Localized(ZZ, 6), QuotientEuclidean(F5X, F5X.canon([2, 0, 1])),
        Excision(ZZ, Z2), Excision(Z8, I4), Excision(ZZ, Ideal.of(ZZ, [6, 4])),
        Double(ZZ, Z2), Double(Z8, I4),
    ]


def _uv_checks(E: Excision, rng) -> bool:
    U, V = DoubleU(E), DoubleV(Double(E.base, E.ideal))
    D = U.target
    x, y = E.random(rng), E.random(rng)
    d = D.random(rng)
    return (
        E.eq(V(U(x)), x)
        and D.eq(U(V(d)), d)
        and D.eq(U(E.mul(x, y)), D.mul(U(x), U(y)))
        and D.eq(U(E.add(x, y)), D.add(U(x), U(y)))
        and E.eq(V(D.mul(d, U(y))), E.mul(V(d), y))
        and D.eq(U(E.one), D.one)
    )


def _excision_hom_checks(E: Excision, rng) -> bool:
    R = E.base
    x, y = E.random(rng), E.random(rng)
    r = R.random(rng)
    ok = True
    for h in (ProjectPi(E), BarSplit(E)):
        ok &= R.eq(h(E.mul(x, y)), R.mul(h(x), h(y)))
        ok &= R.eq(h(E.add(x, y)), R.add(h(x), h(y)))
        ok &= R.is_one(h(E.one))
    inc = CanonicalInclusion(E)
    s = R.random(rng)
    ok &= E.eq(inc(R.mul(r, s)), E.mul(inc(r), inc(s)))
    ok &= R.eq(BarSplit(E)(inc(r)), r)
    b, c = E.ideal.random_member(rng), E.ideal.random_member(rng)
    ok &= E.eq(E.mul((R.zero, b), (R.zero, c)), (R.zero, R.mul(b, c)))
    return bool(ok)


def suite_rings(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("rings", seed, trials)
    for R in _ring_zoo():
        run.check(f"axioms[{R}]", 1000, lambda rng, R=R: _axioms(R, rng))
    for E in (Excision(ZZ, Ideal.of(ZZ, [2])), Excision(IntegersMod(8), Ideal.of(IntegersMod(8), [4]))):
        run.check(f"double_iso[{E}]", 1000, lambda rng, E=E: _uv_checks(E, rng))
        run.check(f"excision_homs[{E}]", 1000, lambda rng, E=E: _excision_hom_checks(E, rng))
    Z8 = IntegersMod(8)
    run.exhaustive("unit_kernel_C[Zmod 8]", [([4], [1, 5]), ([1], [1, 3, 5, 7]), ([0], [1])],
                   lambda c: unit_kernel_C(Z8, Ideal.of(Z8, c[0])) == c[1])
    return run.result


# ---------------------------------------------------------------------------
# Pfaffian


def suite_pfaffian(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("pfaffian", seed, trials)
    for R in (ZZ, IntegersMod(7)):
        for size in (2, 4, 6, 8):
            n = size // 2

            def perp_mult(rng, R=R, size=size):
                A = S.random_alternating(R, size, rng)
                B = S.random_alternating(R, rng.choice((2, 4)), rng)
                return R.eq(pfaffian(perp(A, B)), R.mul(pfaffian(A), pfaffian(B)))

            def transpose(rng, R=R, size=size, n=n):
                A = S.random_alternating(R, size, rng)
                p = pfaffian(A)
                return R.eq(pfaffian(A.transpose()), p if n % 2 == 0 else R.neg(p))

            def square(rng, R=R, size=size):
                A = S.random_alternating(R, size, rng)
                p = pfaffian(A)
                d = det_cofactor(A)
                return R.eq(R.mul(p, p), d) and R.eq(d, det(A))

            def congruence(rng, R=R, size=size):
                A = S.random_alternating(R, size, rng)
                B = Matrix(R, [[S.element(R, rng, 4) for _ in range(size)] for _ in range(size)])
                return R.eq(pfaffian(B.transpose() @ A @ B), R.mul(det(B), pfaffian(A)))

            run.check(f"pf_perp[{R},{size}]", 500, perp_mult)
            run.check(f"pf_transpose[{R},{size}]", 500, transpose)
            run.check(f"pf_squared_is_det[{R},{size}]", 500, square)
            run.check(f"pf_congruence[{R},{size}]", 500, congruence)
            run.exhaustive(f"pf_chi[{R},{size}]", [n], lambda k, R=R: R.is_one(pfaffian(chi(R, k))))
    return run.result


# ---------------------------------------------------------------------------
# elementary relations


def _relation_rings():
    return [
        (ZZ, lambda rng: rng.randint(-9, 9)),
        (IntegersMod(8), lambda rng: rng.randrange(8)),
        (Polynomial(IntegersMod(5)), lambda rng, P=Polynomial(IntegersMod(5)): P.random(rng, degree=3)),
    ]


def _atoms_word(R, size, atoms):
    return ElementaryWord(R, SYMPLECTIC, size,
                          tuple(PlainGen(i, j, a if e == 1 else R.neg(a)) for i, j, a, e in atoms))


def _random_invertible(R, n, rng):
    while True:
        M = Matrix(R, [[R.random(rng) for _ in range(n)] for _ in range(n)])
        if R.is_unit(det(M)):
            return M


def suite_elementary(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("elementary", seed, trials)
    for R, sample in _relation_rings():
        for size in (6, 8):
            for name in RELATIONS:
                label = "E" + name[1:]

                def rel(rng, R=R, size=size, name=name, sample=sample):
                    lhs, rhs = relation_instance(name, R, size, rng, sample)
                    return word_eval(_atoms_word(R, size, lhs)) == word_eval(_atoms_word(R, size, rhs))

                run.check(f"{label}[{R},Sp{size}]", 1000, rel)
    for R, sample in _relation_rings():
        pairs = [(i, j) for i in range(1, 7) for j in range(1, 7) if i != j]

        def gen_ok(p, R=R, sample=sample):
            i, j = p
            a = R.coerce(sample(S.rng_for(seed, "gen", R, i, j)))
            G = elem_generator(SYMPLECTIC, 6, i, j, a, R)
            word = ElementaryWord(R, SYMPLECTIC, 6, (PlainGen(i, j, a),))
            return is_symplectic(G) and G == word_eval(word)

        run.exhaustive(f"generator_symplectic[{R},Sp6]", pairs, gen_ok)

    def whitehead(rng):
        R, n = (IntegersMod(7), 2) if rng.random() < 0.5 else (IntegersMod(5), 3)
        g = _random_invertible(R, n, rng)
        return word_eval(whitehead_word(g)) == perp(g, inverse(g))

    run.check("whitehead", 200, whitehead)

    def principal(rng):
        m = rng.choice((2, 3, 5))
        n = rng.choice((3, 4))
        I = Ideal.of(ZZ, [m])
        v = UnimodularRow.make(ZZ, S.random_unimodular_relative(n, m, rng), ideal=I)
        word, v2 = reduce_to_principal(v)
        a1 = 1 - v.entries[0]
        return (list(word.apply_to_vector(v.entries)) == list(v2.entries)
                and list(v2.entries) == [v.entries[0]] + [a1 * x for x in v.entries[1:]])

    run.check("reduce_to_principal", 200, principal)

    def homotopy(rng):
        I = Ideal.of(ZZ, [2])
        fam = rng.choice((LINEAR, SYMPLECTIC))
        w = S.random_word(ZZ, fam, 4, rng, 3, I)
        h = homotopy_word(w)
        P = h.ring
        M = word_eval(h)
        at0 = apply_hom(EvalAt(P, 0), M)
        at1 = apply_hom(EvalAt(P, 1), M)
        shaped = all(len(a.a) == 0 or (a.a[0] == 0 and len(a.a) == 2 and I.member(a.a[1])) for a in h.atoms)
        return at0 == Matrix.identity(ZZ, 4) and at1 == word_eval(w) and shaped

    run.check("homotopy", 200, homotopy)
    return run.result


# ---------------------------------------------------------------------------
# Steinberg words


def _small_fraction(rng):
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if q:
            return q


def suite_steinberg(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("steinberg", seed, trials)
    for R, sample in ((ZZ, lambda rng: rng.randint(-9, 9)), (IntegersMod(8), lambda rng: rng.randrange(8))):
        for name in RELATIONS:
            run.check(f"{name}[{R}]", 1000,
                      lambda rng, R=R, name=name, sample=sample: kernel_check(relation_word(name, R, 3, rng, sample)))
    Z7 = IntegersMod(7)
    for R, unit in ((Z7, lambda rng: rng.randint(1, 6)), (QQ, _small_fraction)):
        def symbols(rng, R=R, unit=unit):
            r, s = R.coerce(unit(rng)), R.coerce(unit(rng))
            ok = kernel_check(symbol_build("curly", R, r, s)) and kernel_check(symbol_build("square", R, r, s))
            ok = ok and kernel_check(symbol_build("square", R, r, 1))
            i, j = rng.choice([(1, 3), (1, 2), (2, 5), (4, 3)])
            sw = steinberg_phi(symbol_build("sw", R, r, i=i, j=j))
            sh = steinberg_phi(symbol_build("sh", R, r, i=i, j=j))
            monomial = all(sum(1 for x in row if not R.is_zero(x)) == 1 for row in sw.rows)
            diagonal = all(R.is_zero(sh.rows[a][b]) for a in range(6) for b in range(6) if a != b)
            return ok and monomial and diagonal and is_symplectic(sw)

        run.check(f"symbols[{R}]", 100, symbols)

    def phi_paths(rng):
        R = ZZ
        items = []
        for _ in range(rng.randint(1, 5)):
            i, j = rng.sample(range(1, 7), 2)
            items.append((i, j, rng.randint(-5, 5), rng.choice((1, -1))))
        w = SteinbergWord.of(R, 3, *items)
        return steinberg_phi(w) == steinberg_phi_esd(w)

    run.check("phi_matches_transvections", 200, phi_paths)

    def residue(rng):
        I = Ideal.of(ZZ, [3])
        items = [(*rng.sample(range(1, 7), 2), 3 * rng.randint(-4, 4)) for _ in range(4)]
        w = SteinbergWord.of(ZZ, 3, *items)
        return residue_trivial(w, I) and not residue_trivial(SteinbergWord.of(ZZ, 3, (1, 2, 1)), I)

    run.check("residue_trivial", 100, residue)
    return run.result


# ---------------------------------------------------------------------------
# ESD transvections


def _isotropic_partner(R, u, rng, skip=(), height=5):
    """Random ``v`` with ``<u, v> = 0`` supported away from ``skip``.

    Needs a coordinate ``k`` of ``u`` that is a unit; ``v_s(k)`` absorbs the
    pairing.
    """
    size = len(u)
    ks = [k for k in range(1, size + 1) if k not in skip and R.is_unit(u[k - 1])]
    k = rng.choice(ks)
    v = [R.zero if (c in skip) else R.from_int(rng.randint(-height, height)) for c in range(1, size + 1)]
    sk = sigma_index(k)
    v[sk - 1] = R.zero
    p = pairing(R, u, v)
    # pairing is linear in v_s(k) with coefficient eps(k) u_k
    coef = R.mul(R.from_int(1 if k % 2 else -1), u[k - 1])
    v[sk - 1] = R.neg(R.mul(p, R.inv(coef)))
    return v


def _vector_with_unit(R, size, rng, skip=(), height=5):
    u = [R.zero if (c in skip) else R.from_int(rng.randint(-height, height)) for c in range(1, size + 1)]
    free = [c for c in range(1, size + 1) if c not in skip]
    u[rng.choice(free) - 1] = R.from_int(rng.choice((1, -1)))
    return u


def suite_esd(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("esd", seed, trials)
    R = ZZ
    size = 6
    pairs = [(i, j) for i in range(1, size + 1) for j in range(1, size + 1) if i != j]
    for ring in (ZZ, IntegersMod(8)):
        def same(p, ring=ring):
            i, j = p
            a = ring.from_int(S.rng_for(seed, "esd-gen", i, j).randint(-9, 9))
            return transvection_generator(ring, size, i, j, a) == elem_generator(SYMPLECTIC, size, i, j, a, ring)

        run.exhaustive(f"transvection_is_generator[{ring},Sp6]", pairs, same)

    def rel_2(rng):
        u = _vector_with_unit(R, size, rng)
        v, w = _isotropic_partner(R, u, rng), _isotropic_partner(R, u, rng)
        c = rng.randint(-4, 4)
        u = [c * x for x in u] if c else u
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        lhs = esd_transform(R, u, v, a) @ esd_transform(R, u, w, b)
        rhs = esd_transform(R, u, [x + y for x, y in zip(v, w)], a + b + pairing(R, v, w))
        return lhs == rhs

    def rel_3(rng):
        u = _vector_with_unit(R, size, rng)
        v = _isotropic_partner(R, u, rng)
        a = rng.randint(-9, 9)
        return esd_transform(R, u, [a * x for x in v], 0) == esd_transform(R, v, [a * x for x in u], 0)

    def rel_4(rng):
        u = _vector_with_unit(R, size, rng)
        v = _isotropic_partner(R, u, rng)
        w = S.random_word(R, SYMPLECTIC, size, rng, rng.randint(1, 4))
        g = word_eval(w)
        ginv = word_eval(w.inverse())
        lhs = g @ esd_transform(R, u, v, 0) @ ginv
        gu = [sum(g.rows[r][k] * u[k] for k in range(size)) for r in range(size)]
        gv = [sum(g.rows[r][k] * v[k] for k in range(size)) for r in range(size)]
        return lhs == esd_transform(R, gu, gv, 0)

    def rel_ii(rng):
        i = rng.randint(1, size)
        si = sigma_index(i)
        skip = (i, si)
        u = _vector_with_unit(R, size, rng, skip)
        v = _isotropic_partner(R, u, rng, skip)
        if rng.random() < 0.5:
            u, v = v, u
        a = rng.randint(-9, 9)
        ei, esi = unit_vector(R, size, i), unit_vector(R, size, si)
        A = esd_transform(R, ei, u, 0)
        Ainv = esd_transform(R, ei, [-x for x in u], 0)
        B = esd_transform(R, esi, v, a)
        Binv = inverse(B)
        lhs = A @ B @ Ainv @ Binv
        e_i = 1 if i % 2 else -1
        e_si = -e_i
        rhs = esd_transform(R, u, [e_i * x for x in v], a) @ esd_transform(R, esi, [-e_si * a * x for x in u], 0)
        return lhs == rhs

    run.check("relation_I_2", 500, rel_2)
    run.check("relation_I_3", 500, rel_3)
    run.check("relation_I_4_a0", 500, rel_4)
    run.check("relation_II", 500, rel_ii)
    return run.result


# ---------------------------------------------------------------------------
# lifts


def _relative_settings():
    Z8 = IntegersMod(8)
    return [(ZZ, Ideal.of(ZZ, [2]), [1, -1]), (Z8, Ideal.of(Z8, [4]), [1, 5])]


def suite_lifts(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("lifts", seed, trials)
    for R, I, units in _relative_settings():
        E = Excision(R, I)
        D = Double(R, I)
        run.check(f"axioms[{E}]", 1000, lambda rng, E=E: _axioms(E, rng))
        run.check(f"axioms[{D}]", 1000, lambda rng, D=D: _axioms(D, rng))
        run.check(f"uv_round_trip[{E}]", 1000, lambda rng, E=E: _uv_checks(E, rng))

        def mult(rng, R=R, I=I, E=E):
            n = rng.randint(1, 3)
            k = rng.randint(1, 3)
            beta = Matrix(R, [[I.random_member(rng) for _ in range(k)] for _ in range(2 * n)])
            gam = Matrix(R, [[I.random_member(rng) for _ in range(2 * n)] for _ in range(k)])
            c = chi(R, n)
            cL = apply_hom(CanonicalInclusion(E), c)
            return (cL @ lift_entries(beta, I) == lift_entries(c @ beta, I)
                    and lift_entries(gam, I) @ cL == lift_entries(gam @ c, I))

        run.check(f"lifts_multiplication[{R}]", 500, mult)

        def tilde(rng, R=R, I=I, units=units, E=E):
            h1, h2 = rng.randint(1, 2), rng.randint(1, 2)
            a = S.random_alt_rep(R, h1, rng, I, rng.choice(units), 2)
            b = S.random_alt_rep(R, h2, rng, I, rng.choice(units), 2)
            if lift_alt(perp(a, b), I) != perp(lift_alt(a, I), lift_alt(b, I)):
                return False
            s = sigma(R, h1)
            sL = apply_hom(CanonicalInclusion(E), s)
            return lift_alt(s @ inverse(a) @ s, I) == sL @ inverse(lift_alt(a, I)) @ sL

        run.check(f"tilde_operation[{R}]", 500, tilde)

        def lift_sl(rng, R=R, I=I, E=E):
            n = rng.randint(2, 4)
            a = S.random_linear(R, n, rng, 3, I)
            L = lift_matrix(a, I, "sl")
            return E.is_one(det(L)) and project(L) == a

        def lift_sp(rng, R=R, I=I, E=E):
            n = rng.choice((4, 6))
            a = S.random_symplectic(R, n, rng, 3, I)
            L = lift_matrix(a, I, "sp")
            return is_symplectic(L) and project(L) == a

        run.check(f"lift_sl[{R}]", 200, lift_sl)
        run.check(f"lift_sp[{R}]", 200, lift_sp)

        def words(rng, R=R, I=I, E=E):
            fam = rng.choice((LINEAR, SYMPLECTIC))
            w = S.random_word(R, fam, 4, rng, 3, I)
            lw = lift_word(w, I)
            M = word_eval(lw)
            bar = apply_hom(BarSplit(E), M)
            return (project(M) == word_eval(w) and is_relative(M, split_ideal(E))
                    and bar == Matrix.identity(R, 4))

        run.check(f"lift_word_projection[{R}]", 200, words)

    def rows(rng):
        m = rng.choice((2, 3, 5))
        I = Ideal.of(ZZ, [m])
        v = UnimodularRow.make(ZZ, S.random_unimodular_relative(rng.choice((2, 3, 4)), m, rng), ideal=I)
        vl = lift_row(v)
        E = vl.ring
        pi = ProjectPi(E)
        pairing_one = E.is_one(E.sum(E.mul(a, b) for a, b in zip(vl.entries, vl.witness)))
        return pairing_one and [pi(x) for x in vl.entries] == list(v.entries)

    run.check("lift_row_projection[Z]", 200, rows)

    def compat(rng):
        m = rng.choice((2, 3, 6))
        I = Ideal.of(ZZ, [m])
        a = S.random_linear(ZZ, rng.randint(2, 3), rng, 3, I)
        return localization_compat(a, I, rng.choice((1, 2, 3, 5, 6, 7)))

    run.check("localization_compat[Z]", 100, compat)
    return run.result


# ---------------------------------------------------------------------------
# Witt calculus


def suite_witt(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("witt", seed, trials)
    Z8 = IntegersMod(8)
    I4 = Ideal.of(Z8, [4])
    C = unit_kernel_C(Z8, I4)
    run.exhaustive("pf_section[Zmod 8,<4>]", C, lambda a: Z8.eq(pfaffian(pf_section(Z8, a, I4).matrix), a))

    def cert(ab, R=Z8, I=I4):
        a, b = ab
        A, B, c = whitehead_certificate(R, I, a, b)
        g = Matrix(R, [[b, 0], [0, 1]])
        D = inverse(word_eval(whitehead_word(g)))
        return check_equiv(A, B, c) and D.transpose() @ A.matrix @ D == B.matrix

    run.exhaustive("whitehead_certificate[Zmod 8,<4>]", [(a, b) for a in C for b in C], cert)
    Z9 = IntegersMod(9)
    I3 = Ideal.of(Z9, [3])
    C9 = unit_kernel_C(Z9, I3)
    run.exhaustive("whitehead_certificate[Zmod 9,<3>]", [(a, b) for a in C9 for b in C9],
                   lambda ab: cert(ab, Z9, I3))

    def hyper(rng):
        R = rng.choice((ZZ, Z8))
        a = S.random_symplectic(R, rng.choice((2, 4, 6)), rng, 4)
        return hyperbolic_H(a).matrix == chi(R, a.nrows // 2)

    run.check("hyperbolic_of_symplectic", 100, hyper)
    settings = _relative_settings()

    def inv_pf(rng):
        R, I, _ = rng.choice(settings)
        A = AltRep(S.random_alt_rep(R, rng.randint(1, 3), rng, I), I)
        inv = witt_inverse_rep(A)
        return A.pfaffian_one and inv.pfaffian_one

    run.check("inverse_rep_pfaffian", 200, inv_pf)

    def pf_mult(rng):
        R, I, units = rng.choice(settings)
        A = AltRep(S.random_alt_rep(R, rng.randint(1, 2), rng, I, rng.choice(units)), I)
        B = AltRep(S.random_alt_rep(R, rng.randint(1, 2), rng, I, rng.choice(units)), I)
        return R.eq(witt_perp(A, B).pf, R.mul(A.pf, B.pf))

    run.check("pfaffian_multiplicative", 100, pf_mult)

    def padding(rng):
        R, I, units = rng.choice(settings)
        h = rng.randint(1, 2)
        B = AltRep(S.random_alt_rep(R, h, rng, I, rng.choice(units)), I)
        eps = S.random_word(R, LINEAR, 2 * h, rng, 3, I)
        e = word_eval(eps)
        A = AltRep(e.transpose() @ B.matrix @ e, I)
        c = EquivCertificate(0, widen_word(eps, 2 * h))
        return check_equiv(A, B, c) and check_equiv(A, B, c.padded()) and check_equiv(A, B, c.padded().padded())

    run.check("padding_invariance", 100, padding)

    def planted_block(rng):
        R, I, units = rng.choice(settings)
        h = rng.randint(1, 2)
        theta1 = AltRep(S.random_alt_rep(R, h, rng, I, rng.choice(units)), I)
        beta0 = S.random_linear(R, 2 * h, rng, 3, I)
        theta2 = AltRep(beta0.transpose() @ theta1.matrix @ beta0, I)
        p = I.random_member(rng)
        u = [I.random_member(rng) for _ in range(2 * h)]
        x = Matrix(R, [u]) @ theta1.matrix @ beta0
        rows = [[R.one, p] + list(x.rows[0]), [R.zero, R.one] + [R.zero] * (2 * h)]
        for r in range(2 * h):
            rows.append([R.zero, u[r]] + list(beta0.rows[r]))
        delta = Matrix(R, rows)
        beta = extract_block(delta, theta1, theta2)
        return beta == beta0 and is_relative(beta, I)

    run.check("extract_block", 200, planted_block)

    def kernel_h(rng):
        R, I, _ = rng.choice(settings)
        n = rng.randint(1, 2)
        s = rng.randint(0, 1)
        sp = S.random_symplectic(R, 2 * n, rng, 3, I)
        gw = S.random_word(R, LINEAR, 2 * n, rng, 3, I)
        alpha = sp @ word_eval(gw)
        eps = widen_word(gw.inverse(), 2 * s)
        gamma = AltRep(S.random_alt_rep(R, rng.randint(1, 2), rng, I), I)
        out = kernel_of_H_construct(alpha, gamma, s, eps, I)
        return is_relative(out, I) and R.is_one(det(out))

    run.check("kernel_of_H", 50, kernel_h)

    def search(rng):
        I = Ideal.of(ZZ, [2])
        B = AltRep(perp(Matrix(ZZ, [[0, -1], [1, 0]]), chi(ZZ, 1)) if rng.random() < 0.5 else chi(ZZ, 2), I)
        i, j = rng.sample(range(1, 5), 2)
        eps = ElementaryWord(ZZ, LINEAR, 4, (PlainGen(i, j, 2 * rng.choice((1, -1))),))
        e = word_eval(eps)
        A = AltRep(e.transpose() @ B.matrix @ e, I)
        c = search_equiv(A, B, budget=20_000, max_atoms=1, max_height=1, paddings=(0,))
        return check_equiv(A, B, c)

    run.check("search_equiv_planted", 10, search)
    return run.result


# ---------------------------------------------------------------------------
# completion and patching


def _coprime_pair_int(rng):
    while True:
        s, t = rng.randint(2, 30), rng.randint(2, 30)
        if math.gcd(s, t) == 1:
            return s, t


def _coprime_pair_poly(P, rng):
    while True:
        s = P.random(rng, degree=2)
        t = P.random(rng, degree=2)
        if len(s) >= 2 and len(t) >= 2 and len(P.gcd(s, t)) == 1:
            return s, t


def suite_completion(seed: int = 7, trials: Optional[int] = None) -> SuiteResult:
    run = _Runner("completion", seed, trials)

    def patch_z(rng):
        m = rng.choice((2, 3, 6))
        I = Ideal.of(ZZ, [m])
        a = S.random_symplectic(ZZ, rng.choice((2, 4)), rng, 4, I)
        s, t = _coprime_pair_int(rng)
        return patch_symplectic(s, t, localize_matrix(a, s), localize_matrix(a, t), I) == a

    F5T = Polynomial(IntegersMod(5), "T")

    def patch_poly(rng):
        I = Ideal.of(F5T, [[0, 1]])
        a = S.random_symplectic(F5T, rng.choice((2, 4)), rng, 3, I)
        s, t = _coprime_pair_poly(F5T, rng)
        return patch_symplectic(s, t, localize_matrix(a, s), localize_matrix(a, t), I) == a

    run.check("patch_round_trip[Z]", 200, patch_z)
    run.check("patch_round_trip[poly Zmod 5 T]", 200, patch_poly)

    def curated(case):
        m, row = case
        I = Ideal.of(ZZ, [m])
        v = UnimodularRow.make(ZZ, row, ideal=I)
        res = complete_row_via_excision(v)
        return verify_completion(v, res.gamma) and is_relative(res.gamma, I)

    run.exhaustive("curated_relative_completion", CURATED_ROWS, curated)

    def euclid(rng):
        n = rng.choice((3, 4))
        v = S.random_unimodular(ZZ, n, rng)
        w = row_reduce_euclidean(v, ZZ)
        return w.apply_to_vector(v) == [1] + [0] * (n - 1)

    run.check("euclidean_reduction", 500, euclid)

    def random_relative(rng):
        m = rng.choice((2, 3, 5, 6))
        n = rng.choice((3, 4))
        I = Ideal.of(ZZ, [m])
        v = UnimodularRow.make(ZZ, S.random_unimodular_relative(n, m, rng), ideal=I)
        return verify_completion(v, complete_row_via_excision(v).gamma)

    run.check("random_relative_completion", 100, random_relative)
    return run.result


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "rings": suite_rings,
    "pfaffian": suite_pfaffian,
    "elementary": suite_elementary,
    "steinberg": suite_steinberg,
    "esd": suite_esd,
    "lifts": suite_lifts,
    "witt": suite_witt,
    "completion": suite_completion,
}


def run_suite(name: str, seed: int = 7, trials: Optional[int] = None) -> List[SuiteResult]:
    if name == "all":
        return [fn(seed, trials) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](seed, trials)]

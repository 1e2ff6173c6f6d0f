"""Named verification suites over every module: relation vanishing, Lie
and Poisson axioms, oracle agreements, group laws, determinism-friendly
reporting.

Each suite returns a report ``{"suite": name, "cases": int, "failures":
[{"instance", "expected", "got"}, ...]}``.  All sampling is driven by
``random.Random(f"{seed}:{suite}")`` so reports are byte-identical for a
fixed seed.  ``run_all`` chains every suite with instance labels prefixed
by the suite name.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from . import assoc as assoc_mod
from . import cohomology as cohom_mod
from . import lie as lie_mod
from . import poisson as poisson_mod
from .groups import GroupContext, GroupElement, SurfaceGroup, cyclic_group, load_group


@dataclass
class VerifyConfig:
    group: str = "C2"
    n: int = 3
    q: int = 1
    k: int = 2
    seed: int = 0
    radius: int = 1
    samples: int = 40
    max_basis: int = 200_000

    def build_group(self) -> GroupContext:
        return load_group(self.group)


def _rng(cfg: VerifyConfig, suite: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{suite}")


def _decorations(cfg: VerifyConfig, group: GroupContext) -> List[GroupElement]:
    if group.is_finite:
        return group.elements()
    return group.enumerate_ball(cfg.radius)


def _fail(failures: List[dict], instance: str, expected, got) -> None:
    failures.append(
        {"instance": instance, "expected": str(expected), "got": str(got)}
    )


# ---------------------------------------------------------------------------
# shared random-object helpers (also used by the test suites)


def random_expression_tree(
    rng: random.Random, n: int, decorations: Sequence[GroupElement], leaves: int
):
    """A random bracket-expression tree over generator leaves, as nested
    tuples: ("gen", i, j, sigma) | ("bracket", L, R)."""
    if leaves <= 1:
        i = rng.randint(2, n)
        j = rng.randint(1, i - 1)
        return ("gen", i, j, rng.choice(decorations))
    split = rng.randint(1, leaves - 1)
    return (
        "bracket",
        random_expression_tree(rng, n, decorations, split),
        random_expression_tree(rng, n, decorations, leaves - split),
    )


def eval_expression_tree(ctx: lie_mod.LieContext, tree) -> lie_mod.LieElement:
    if tree[0] == "gen":
        return ctx.generator(tree[1], tree[2], tree[3])
    return ctx.bracket(
        eval_expression_tree(ctx, tree[1]), eval_expression_tree(ctx, tree[2])
    )


def random_lie_element(
    rng: random.Random,
    ctx: lie_mod.LieContext,
    decorations: Sequence[GroupElement],
    max_leaves: int = 3,
    terms: int = 2,
) -> lie_mod.LieElement:
    out = ctx.zero()
    for _ in range(terms):
        tree = random_expression_tree(rng, ctx.n, decorations, rng.randint(1, max_leaves))
        coef = Fraction(rng.randint(-3, 3))
        if coef:
            out = out + eval_expression_tree(ctx, tree).scale(coef)
    return out


def monomials_by_degree(
    pctx: poisson_mod.PoissonContext, max_degree: int
) -> Dict[int, List[poisson_mod.Monomial]]:
    out: Dict[int, List[poisson_mod.Monomial]] = {}
    for d in range(1, max_degree + 1):
        monos = poisson_mod.enumerate_monomials(pctx, d)
        if monos:
            out[d] = monos
    return out


def random_homogeneous_poisson(
    rng: random.Random,
    pctx: poisson_mod.PoissonContext,
    pool: Dict[int, List[poisson_mod.Monomial]],
    terms: int = 2,
) -> Tuple[poisson_mod.PoissonElement, int]:
    """A random homogeneous element and its (nominal) degree."""
    degree = rng.choice(sorted(pool))
    out = pctx.zero()
    for _ in range(terms):
        mono = rng.choice(pool[degree])
        coef = Fraction(rng.randint(-3, 3))
        if coef:
            out = out + poisson_mod.PoissonElement(pctx, {mono: coef})
    return out, degree


# ---------------------------------------------------------------------------
# suites


def suite_group_laws(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "group-laws")
    group = cfg.build_group()
    pool = _decorations(cfg, group)
    ident = group.identity()

    sample = pool if len(pool) <= 6 else rng.sample(pool, 6)
    for x in sample:
        for y in sample:
            for z in sample:
                cases += 1
                lhs = group.multiply(group.multiply(x, y), z)
                rhs = group.multiply(x, group.multiply(y, z))
                if not group.equals(lhs, rhs):
                    _fail(failures, f"assoc[{x};{y};{z}]", lhs, rhs)
    for x in sample:
        cases += 3
        if not group.equals(group.multiply(x, ident), x):
            _fail(failures, f"identity-right[{x}]", x, group.multiply(x, ident))
        if not group.equals(group.multiply(ident, x), x):
            _fail(failures, f"identity-left[{x}]", x, group.multiply(ident, x))
        if not group.is_identity(group.multiply(x, group.invert(x))):
            _fail(failures, f"inverse[{x}]", "e", group.multiply(x, group.invert(x)))
    for x in sample:
        cases += 1
        again = group.canonicalize(x.payload)
        if not group.equals(again, x):
            _fail(failures, f"canonical-idempotent[{x}]", x, again)
    sizes = [len(group.enumerate_ball(r)) for r in range(3)]
    cases += 1
    if not (sizes[0] == 1 and sizes[0] <= sizes[1] <= sizes[2]):
        _fail(failures, "ball-monotone", "1 <= |B1| <= |B2|", sizes)

    # fixed genus-2 word-problem checks, independent of the configured group
    surf = SurfaceGroup(2)
    cases += 1
    if not surf.is_trivial_word(surf.relator):
        _fail(failures, "surface-relator", "e", surf.canonicalize(surf.relator))
    for trial in range(5):
        cases += 1
        word: tuple = ()
        for _ in range(rng.randint(1, 4)):
            conj = tuple(
                rng.choice([1, -1, 2, -2, 3, -3, 4, -4])
                for _ in range(rng.randint(0, 3))
            )
            base = surf.relator if rng.random() < 0.5 else tuple(
                -letter for letter in reversed(surf.relator)
            )
            word = word + conj + base + tuple(-letter for letter in reversed(conj))
        if not surf.is_trivial_word(word):
            _fail(failures, f"surface-conjugate-product[{trial}]", "e", word)
    for trial in range(10):
        cases += 1
        length = rng.randint(1, 4)
        word = ()
        while len(word) < length:
            letter = rng.choice([1, -1, 2, -2, 3, -3, 4, -4])
            if word and word[-1] == -letter:
                continue
            word = word + (letter,)
        if surf.is_trivial_word(word):
            _fail(failures, f"surface-short-nontrivial[{trial}]", "nontrivial", "e")
    cases += 1
    ball_sizes = [len(surf.enumerate_ball(r)) for r in range(3)]
    if ball_sizes != [1, 9, 65]:
        _fail(failures, "surface-ball-sizes", [1, 9, 65], ball_sizes)
    return cases, failures


def suite_lie_relations(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    group = cfg.build_group()
    ctx = lie_mod.LieContext(group, cfg.n, cfg.q)
    decorations = _decorations(cfg, group)
    for label, terms in lie_mod.pure_braid_relations(cfg.n, decorations, group):
        cases += 1
        value = lie_mod.evaluate_relation(ctx, terms)
        if not value.is_zero():
            _fail(failures, label, "0", value)
    return cases, failures


def suite_lie_axioms(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "lie-axioms")
    group = cfg.build_group()
    ctx = lie_mod.LieContext(group, cfg.n, cfg.q)
    decorations = _decorations(cfg, group)
    for trial in range(min(cfg.samples, 30)):
        x = random_lie_element(rng, ctx, decorations)
        y = random_lie_element(rng, ctx, decorations)
        z = random_lie_element(rng, ctx, decorations, max_leaves=1)
        cases += 4
        if not ctx.bracket(x, x).is_zero():
            _fail(failures, f"alternating[{trial}]", "0", ctx.bracket(x, x))
        anti = ctx.bracket(x, y) + ctx.bracket(y, x)
        if not anti.is_zero():
            _fail(failures, f"antisymmetry[{trial}]", "0", anti)
        jac = (
            ctx.bracket(x, ctx.bracket(y, z))
            + ctx.bracket(y, ctx.bracket(z, x))
            + ctx.bracket(z, ctx.bracket(x, y))
        )
        if not jac.is_zero():
            _fail(failures, f"jacobi[{trial}]", "0", jac)
        lin = ctx.bracket(x + y.scale(2), z) - ctx.bracket(x, z) - ctx.bracket(y, z).scale(2)
        if not lin.is_zero():
            _fail(failures, f"bilinear[{trial}]", "0", lin)
    return cases, failures


_DIMENSION_MODELS = [
    ("C2-n3", lambda: cyclic_group(2), 3, [6, 7, 22]),
    ("trivial-n3", lambda: cyclic_group(1), 3, [3, 1, 2]),
    ("trivial-n2", lambda: cyclic_group(1), 2, [1, 0, 0]),
]


def suite_lie_dims(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    for label, make, n, expected in _DIMENSION_MODELS:
        group = make()
        ctx = lie_mod.LieContext(group, n)
        for ell in (1, 2, 3):
            cases += 1
            counted = lie_mod.graded_dimension(ctx, ell)
            enumerated = lie_mod.graded_dimension_by_enumeration(ctx, ell)
            brute = lie_mod.bruteforce_dimension(ctx, ell, max_basis=cfg.max_basis)
            want = expected[ell - 1]
            if not (counted == enumerated == brute == want):
                _fail(
                    failures,
                    f"dims[{label};len={ell}]",
                    want,
                    (counted, enumerated, brute),
                )
    return cases, failures


def _permutations(n: int) -> List[Tuple[int, ...]]:
    import itertools

    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def suite_symmetric_action(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "symmetric-action")
    group = cfg.build_group()
    ctx = lie_mod.LieContext(group, cfg.n, cfg.q)
    actx = assoc_mod.AssocContext(group, cfg.n)
    decorations = _decorations(cfg, group)
    perms = _permutations(cfg.n)
    if len(perms) > 24:
        perms = perms[:24]
    trivial_tuple = tuple(group.identity() for _ in range(cfg.n))

    relations = list(lie_mod.pure_braid_relations(cfg.n, decorations, group))
    for perm in perms:
        for label, terms in relations:
            cases += 1
            mapped = ctx.zero()
            for coef, (i, j, sigma), (s, t, tau) in terms:
                ga = ctx.generator(i, j, sigma)
                gb = ctx.generator(s, t, tau)
                mapped = mapped + ctx.bracket(
                    ctx.act_symmetric(perm, ga), ctx.act_symmetric(perm, gb)
                ).scale(coef)
            if not mapped.is_zero():
                _fail(failures, f"relation-image[{perm};{label}]", "0", mapped)
    for trial in range(min(cfg.samples, 12)):
        perm = rng.choice(perms)
        other = rng.choice(perms)
        x = random_lie_element(rng, ctx, decorations)
        y = random_lie_element(rng, ctx, decorations)
        cases += 3
        hom = ctx.act_symmetric(perm, ctx.bracket(x, y)) - ctx.bracket(
            ctx.act_symmetric(perm, x), ctx.act_symmetric(perm, y)
        )
        if not hom.is_zero():
            _fail(failures, f"lie-homomorphism[{trial}]", "0", hom)
        composed = tuple(perm[other[i - 1] - 1] for i in range(1, cfg.n + 1))
        two_step = ctx.act_symmetric(perm, ctx.act_symmetric(other, x))
        one_step = ctx.act_symmetric(composed, x)
        if not (two_step - one_step).is_zero():
            _fail(failures, f"composition[{trial}]", "0", two_step - one_step)
        ex = actx.embed_lie(x)
        inter = actx.embed_lie(ctx.act_symmetric(perm, x)) - actx.act_tilde(
            perm, trivial_tuple, ex
        )
        if not inter.is_zero():
            _fail(failures, f"embed-intertwine[{trial}]", "0", inter)
    return cases, failures


def suite_assoc(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "assoc")
    group = cfg.build_group()
    actx = assoc_mod.AssocContext(group, cfg.n)
    lctx = lie_mod.LieContext(group, cfg.n, cfg.q)
    decorations = _decorations(cfg, group)

    def random_word(max_len=3):
        letters = []
        for _ in range(rng.randint(1, max_len)):
            i = rng.randint(2, cfg.n)
            j = rng.randint(1, i - 1)
            letters.append(actx.letter(i, j, rng.choice(decorations)))
        return actx.word(letters)

    for trial in range(min(cfg.samples, 25)):
        a, b, c = random_word(), random_word(), random_word()
        cases += 2
        diff = (a * b) * c - a * (b * c)
        if not diff.is_zero():
            _fail(failures, f"associativity[{trial}]", "0", diff)
        prod = a * b
        if not prod.is_zero():
            want = {da + db for da in a.degrees() for db in b.degrees()}
            if not set(prod.degrees()) <= want:
                _fail(failures, f"degree-additive[{trial}]", sorted(want), prod.degrees())
    # decorated pure-braid relations hold as commutators
    strands = range(1, cfg.n + 1)
    for i in strands:
        for j in strands:
            for s in strands:
                if len({i, j, s}) != 3:
                    continue
                for gamma in decorations:
                    for delta in decorations:
                        cases += 1
                        x = actx.generator(i, j, gamma)
                        y = actx.generator(j, s, delta)
                        z = actx.generator(i, s, group.multiply(gamma, delta))
                        yz = y + z
                        value = x * yz - yz * x
                        if not value.is_zero():
                            _fail(
                                failures,
                                f"assoc-relation[{i},{j},{s};{gamma};{delta}]",
                                "0",
                                value,
                            )
    for trial in range(min(cfg.samples, 10)):
        x = random_lie_element(rng, lctx, decorations)
        y = random_lie_element(rng, lctx, decorations)
        cases += 1
        ex, ey = actx.embed_lie(x), actx.embed_lie(y)
        diff = actx.embed_lie(lctx.bracket(x, y)) - (ex * ey - ey * ex)
        if not diff.is_zero():
            _fail(failures, f"embed-commutator[{trial}]", "0", diff)
    for trial in range(min(cfg.samples, 10)):
        a, b = random_word(), random_word()
        mu, nu = rng.choice(decorations), rng.choice(decorations)
        slot_a, slot_b = rng.randint(1, cfg.n), rng.randint(1, cfg.n)
        cases += 2
        auto = actx.conjugate(mu, slot_a, a * b) - actx.conjugate(
            mu, slot_a, a
        ) * actx.conjugate(mu, slot_a, b)
        if not auto.is_zero():
            _fail(failures, f"conjugation-automorphism[{trial}]", "0", auto)
        ab = actx.conjugate(mu, slot_a, actx.conjugate(nu, slot_b, a))
        ba = actx.conjugate(nu, slot_b, actx.conjugate(mu, slot_a, a))
        if slot_a != slot_b and not (ab - ba).is_zero():
            _fail(failures, f"conjugation-slots-commute[{trial}]", "0", ab - ba)
    if group.is_finite:
        series = assoc_mod.hilbert_coefficients(actx, 3)
        for deg in range(3):
            cases += 1
            count = assoc_mod.count_canonical_words(actx, deg)
            if count != series[deg]:
                _fail(failures, f"hilbert-enumeration[deg={deg}]", series[deg], count)
        if group.order * cfg.n <= 8:
            cases += 1
            brute = assoc_mod.bruteforce_quotient_dimension(actx, 2, max_basis=cfg.max_basis)
            if brute != series[2]:
                _fail(failures, "hilbert-bruteforce[deg=2]", series[2], brute)
    return cases, failures


def suite_cohom(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "cohom")
    group = cfg.build_group()
    cctx = cohom_mod.CohomContext(group, cfg.n)
    decorations = _decorations(cfg, group)

    def random_class():
        i = rng.randint(2, cfg.n)
        j = rng.randint(1, i - 1)
        return cctx.generator(i, j, rng.choice(decorations))

    for mu in decorations:
        for nu in decorations:
            for i in range(2, cfg.n + 1):
                for j in range(1, i):
                    cases += 1
                    sq = cctx.cup(cctx.generator(i, j, mu), cctx.generator(i, j, nu))
                    if not sq.is_zero():
                        _fail(failures, f"square-zero[{i},{j};{mu};{nu}]", "0", sq)
    for trial in range(min(cfg.samples, 15)):
        a, b = random_class(), random_class()
        cases += 2
        anti = cctx.cup(a, b) + cctx.cup(b, a)
        if not anti.is_zero():
            _fail(failures, f"anticommute[{trial}]", "0", anti)
        prod = cctx.cup(a, cctx.cup(b, random_class()))
        for mono in prod.terms:
            tops = [f[0] for f in mono]
            if tops != sorted(set(tops)):
                _fail(failures, f"admissible[{trial}]", "ascending distinct tops", mono)
                break
    if group.is_finite:
        poly = cohom_mod.poincare_polynomial(cctx)
        for deg in range(len(poly)):
            cases += 1
            count = cohom_mod.count_admissible(cctx, deg)
            if count != poly[deg]:
                _fail(failures, f"poincare-enumeration[deg={deg}]", poly[deg], count)
        if group.order * cfg.n <= 8:
            cases += 1
            brute = cohom_mod.bruteforce_cohom_dimension(cctx, 2, max_basis=cfg.max_basis)
            want = poly[2] if len(poly) > 2 else 0
            if brute != want:
                _fail(failures, "poincare-bruteforce[deg=2]", want, brute)
    return cases, failures


def suite_poisson_axioms(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "poisson-axioms")
    group = cfg.build_group()
    grading = poisson_mod.PoissonGrading(cfg.k, cfg.q)
    pctx = poisson_mod.PoissonContext(group, cfg.n, grading)
    decorations = _decorations(cfg, group)
    shift = grading.shift

    if group.is_finite:
        pool = monomials_by_degree(pctx, grading.primitive_degree(2) + grading.generator_degree)
    else:
        pool = {}
    if not pool:
        gens = [
            ((i, ((j, sigma.uid),)),)
            for i in range(2, cfg.n + 1)
            for j in range(1, i)
            for sigma in decorations
        ]
        pool = {grading.generator_degree: gens}

    for label, terms in lie_mod.pure_braid_relations(cfg.n, decorations, group):
        cases += 1
        value = pctx.zero()
        for coef, (i, j, sigma), (s, t, tau) in terms:
            value = value + pctx.bracket(
                pctx.generator(i, j, sigma), pctx.generator(s, t, tau)
            ).scale(coef)
        if not value.is_zero():
            _fail(failures, f"poisson-relation[{label}]", "0", value)

    for trial in range(cfg.samples):
        a, da = random_homogeneous_poisson(rng, pctx, pool)
        b, db = random_homogeneous_poisson(rng, pctx, pool)
        c, dc = random_homogeneous_poisson(rng, pctx, pool)
        cases += 5
        # antisymmetry with the printed exponent
        exponent = da * db + 1 + shift * (da + db + 1)
        anti = pctx.bracket(a, b) - pctx.bracket(b, a).scale(Fraction(-1) ** exponent)
        if not anti.is_zero():
            _fail(failures, f"antisymmetry[{trial}]", "0", anti)
        # printed exponent agrees with the desuspended convention
        if (exponent - (1 + (da + shift) * (db + shift))) % 2 != 0:
            _fail(
                failures,
                f"sign-parity[{trial}]",
                "printed exponent == 1+(|a|+k-1)(|b|+k-1) mod 2",
                exponent,
            )
        # Jacobi with the printed signs
        alpha = Fraction(-1) ** ((da + shift) * (dc + shift))
        beta = Fraction(-1) ** ((db + shift) * (da + shift))
        gamma = Fraction(-1) ** ((dc + shift) * (db + shift))
        jac = (
            pctx.bracket(a, pctx.bracket(b, c)).scale(alpha)
            + pctx.bracket(b, pctx.bracket(c, a)).scale(beta)
            + pctx.bracket(c, pctx.bracket(a, b)).scale(gamma)
        )
        if not jac.is_zero():
            _fail(failures, f"jacobi[{trial}]", "0", jac)
        # product formula, verbatim
        lhs = pctx.bracket(pctx.multiply(a, b), c)
        rhs = pctx.multiply(a, pctx.bracket(b, c)) + pctx.multiply(
            b, pctx.bracket(a, c)
        ).scale(Fraction(-1) ** (da * db))
        if not (lhs - rhs).is_zero():
            _fail(failures, f"product-formula[{trial}]", "0", lhs - rhs)
        # degree of the operation
        br = pctx.bracket(a, b)
        if not br.is_zero() and br.degree() != shift + da + db:
            _fail(failures, f"degree[{trial}]", shift + da + db, br.degree())
    return cases, failures


def suite_suspension(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "suspension")
    group = cfg.build_group()
    if cfg.k >= 3:
        grading = poisson_mod.PoissonGrading(cfg.k, cfg.q)
    else:
        grading = poisson_mod.PoissonGrading(3, 2)
    pctx = poisson_mod.PoissonContext(group, cfg.n, grading)
    target = poisson_mod.PoissonContext(group, cfg.n, grading.suspended())
    decorations = _decorations(cfg, group)
    for trial in range(min(cfg.samples, 50)):
        i = rng.randint(2, cfg.n)
        j = rng.randint(1, i - 1)
        s = rng.randint(2, cfg.n)
        t = rng.randint(1, s - 1)
        a = pctx.generator(i, j, rng.choice(decorations))
        b = pctx.generator(s, t, rng.choice(decorations))
        cases += 1
        lhs = poisson_mod.suspension(pctx.bracket(a, b))
        rhs = target.bracket(poisson_mod.suspension(a), poisson_mod.suspension(b))
        if not (lhs - rhs).is_zero():
            _fail(failures, f"suspension-naturality[{trial}]", "0", lhs - rhs)
    cases += 2
    a = pctx.generator(2, 1, decorations[0])
    product = pctx.multiply(a, a)  # primitives are even here, so a*a != 0
    try:
        poisson_mod.suspension(product)
        _fail(failures, "suspension-rejects-products", "ValueError", "accepted")
    except ValueError:
        pass
    try:
        low = poisson_mod.PoissonContext(
            group, cfg.n, poisson_mod.PoissonGrading(2, grading.q)
        )
        poisson_mod.suspension(low.generator(2, 1, decorations[0]))
        _fail(failures, "suspension-rejects-k2", "ValueError", "accepted")
    except ValueError:
        pass
    return cases, failures


def suite_regrading(cfg: VerifyConfig) -> Tuple[int, List[dict]]:
    cases, failures = 0, []
    rng = _rng(cfg, "regrading")
    group = cfg.build_group()
    decorations = _decorations(cfg, group)
    ctx1 = lie_mod.LieContext(group, cfg.n, q=1)
    ctx3 = lie_mod.LieContext(group, cfg.n, q=3)
    for trial in range(min(cfg.samples, 30)):
        tree = random_expression_tree(rng, cfg.n, decorations, rng.randint(1, 3))
        cases += 2
        x1 = eval_expression_tree(ctx1, tree)
        x3 = eval_expression_tree(ctx3, tree)
        if x1.blocks != x3.blocks:
            _fail(failures, f"q-invariance[{trial}]", x1.blocks, x3.blocks)
        if [3 * d for d in x1.degrees()] != x3.degrees():
            _fail(
                failures,
                f"degree-scaling[{trial}]",
                [3 * d for d in x1.degrees()],
                x3.degrees(),
            )
    grading = poisson_mod.PoissonGrading(cfg.k, cfg.q)
    regraded = grading.regraded()
    cases += 1
    if grading.generator_degree != regraded.generator_degree:
        _fail(
            failures,
            "regraded-generator-degree",
            grading.generator_degree,
            regraded.generator_degree,
        )
    if group.is_finite:
        pctx = poisson_mod.PoissonContext(group, cfg.n, grading)
        rctx = poisson_mod.PoissonContext(group, cfg.n, regraded)
        for d in range(1, 3 * grading.generator_degree + 1):
            cases += 1
            gen_only = [
                m
                for m in poisson_mod.enumerate_monomials(pctx, d)
                if all(len(word) == 1 for _, word in m)
            ]
            gen_only_re = [
                m
                for m in poisson_mod.enumerate_monomials(rctx, d)
                if all(len(word) == 1 for _, word in m)
            ]
            if len(gen_only) != len(gen_only_re):
                _fail(
                    failures,
                    f"regraded-generator-subalgebra[deg={d}]",
                    len(gen_only),
                    len(gen_only_re),
                )
    return cases, failures


SUITES: Dict[str, Callable[[VerifyConfig], Tuple[int, List[dict]]]] = {
    "group-laws": suite_group_laws,
    "lie-relations": suite_lie_relations,
    "lie-axioms": suite_lie_axioms,
    "lie-dims": suite_lie_dims,
    "symmetric-action": suite_symmetric_action,
    "assoc": suite_assoc,
    "cohom": suite_cohom,
    "poisson-axioms": suite_poisson_axioms,
    "suspension": suite_suspension,
    "regrading": suite_regrading,
}


def run_suite(name: str, cfg: VerifyConfig) -> dict:
    if name == "all":
        return run_all(cfg)
    fn = SUITES.get(name)
    if fn is None:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}"
        )
    cases, failures = fn(cfg)
    return {"suite": name, "cases": cases, "failures": failures}


def run_all(cfg: VerifyConfig) -> dict:
    total, failures = 0, []
    for name, fn in SUITES.items():
        cases, fails = fn(cfg)
        total += cases
        for f in fails:
            failures.append(
                {
                    "instance": f"{name}:{f['instance']}",
                    "expected": f["expected"],
                    "got": f["got"],
                }
            )
    return {"suite": "all", "cases": total, "failures": failures}

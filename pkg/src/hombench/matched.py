"""Matched pairs of twisted algebras, their doubles, and Manin triples.

A matched pair is two algebras acting on each other such that the direct sum
carries the same kind of structure (the double). The validators accept
arbitrary candidates and fold the component structures' own validity into the
verdict, so the double-equivalence theorems can be exercised on random input.
"""

from collections import namedtuple

from .errors import AsymmetricInput, DimensionMismatch, InvalidInput, TwistMismatch
from .foundation import (LinearMap, Tensor2, Tensor3, apply_bilinear, basis_vector,
                         map_direct_sum, sub_vectors)
from .algebras import (BilinearForm, Failure, HomLieAlgebra, HomPreLieAlgebra,
                       ValidationReport, combine_reports, validate_hom_lie,
                       validate_hom_pre_lie, validate_quadratic, _record)
from .representations import (HomLieRep, HomPreLieRep, star_maps, validate_lie_rep,
                              validate_pre_lie_rep, _combination)


class LieMatchedPair:
    """Two twisted Lie algebras with mutual actions; first_action[i] acts on the
    second space, second_action[j] acts on the first space."""

    __slots__ = ("first", "second", "first_action", "second_action")

    def __init__(self, first, second, first_action, second_action):
        first_action = tuple(first_action)
        second_action = tuple(second_action)
        if len(first_action) != first.dim or len(second_action) != second.dim:
            raise DimensionMismatch("action counts %d/%d for dims %d/%d"
                                    % (len(first_action), len(second_action), first.dim, second.dim))
        for m in first_action:
            if m.rows != second.dim or m.cols != second.dim:
                raise DimensionMismatch("first action matrix is %dx%d on dim %d" % (m.rows, m.cols, second.dim))
        for m in second_action:
            if m.rows != first.dim or m.cols != first.dim:
                raise DimensionMismatch("second action matrix is %dx%d on dim %d" % (m.rows, m.cols, first.dim))
        self.first = first
        self.second = second
        self.first_action = first_action
        self.second_action = second_action

    def __eq__(self, other):
        if not isinstance(other, LieMatchedPair):
            return NotImplemented
        return (self.first, self.second, self.first_action, self.second_action) == \
               (other.first, other.second, other.first_action, other.second_action)

    def __repr__(self):
        return "LieMatchedPair(%d, %d)" % (self.first.dim, self.second.dim)


class PreLieMatchedPair:
    """Two twisted pre-Lie algebras with mutual left/right action families."""

    __slots__ = ("first", "second", "first_left", "first_right", "second_left", "second_right")

    def __init__(self, first, second, first_left, first_right, second_left, second_right):
        first_left = tuple(first_left)
        first_right = tuple(first_right)
        second_left = tuple(second_left)
        second_right = tuple(second_right)
        if len(first_left) != first.dim or len(first_right) != first.dim:
            raise DimensionMismatch("first action counts %d/%d for dim %d"
                                    % (len(first_left), len(first_right), first.dim))
        if len(second_left) != second.dim or len(second_right) != second.dim:
            raise DimensionMismatch("second action counts %d/%d for dim %d"
                                    % (len(second_left), len(second_right), second.dim))
        for m in first_left + first_right:
            if m.rows != second.dim or m.cols != second.dim:
                raise DimensionMismatch("first action matrix is %dx%d on dim %d" % (m.rows, m.cols, second.dim))
        for m in second_left + second_right:
            if m.rows != first.dim or m.cols != first.dim:
                raise DimensionMismatch("second action matrix is %dx%d on dim %d" % (m.rows, m.cols, first.dim))
        self.first = first
        self.second = second
        self.first_left = first_left
        self.first_right = first_right
        self.second_left = second_left
        self.second_right = second_right

    def __eq__(self, other):
        if not isinstance(other, PreLieMatchedPair):
            return NotImplemented
        return ((self.first, self.second, self.first_left, self.first_right,
                 self.second_left, self.second_right) ==
                (other.first, other.second, other.first_left, other.first_right,
                 other.second_left, other.second_right))

    def __repr__(self):
        return "PreLieMatchedPair(%d, %d)" % (self.first.dim, self.second.dim)


def validate_matched_pair_lie(mp):
    """Check both algebras, both mutual actions, and the two cross compatibilities."""
    g = mp.first
    h = mp.second
    n = g.dim
    m = h.dim
    named = [("first", validate_hom_lie(g)), ("second", validate_hom_lie(h))]
    if g.twist.is_invertible() and h.twist.is_invertible():
        named.append(("first-action", validate_lie_rep(HomLieRep(g, m, h.twist, mp.first_action))))
        named.append(("second-action", validate_lie_rep(HomLieRep(h, n, g.twist, mp.second_action))))
    report = combine_reports(named)
    failures = list(report.failures)

    e = [basis_vector(n, i) for i in range(n)]
    f = [basis_vector(m, i) for i in range(m)]
    phi1 = [g.twist.apply(v) for v in e]
    phi2 = [h.twist.apply(v) for v in f]
    rho = lambda x: _combination(mp.first_action, x, m)
    rhop = lambda x: _combination(mp.second_action, x, n)

    # cross equation with values in the first algebra
    for i in range(n):
        for j in range(n):
            for k in range(m):
                lhs = rhop(phi2[k]).apply(g.basis_bracket(i, j))
                rhs = g.bracket_of(rhop(f[k]).apply(e[i]), phi1[j])
                rhs = tuple(a + b for a, b in zip(rhs, g.bracket_of(phi1[i], rhop(f[k]).apply(e[j]))))
                rhs = tuple(a + b for a, b in zip(rhs, rhop(rho(e[j]).apply(f[k])).apply(phi1[i])))
                rhs = sub_vectors(rhs, rhop(rho(e[i]).apply(f[k])).apply(phi1[j]))
                _record(failures, "cross-first", (i, j, k), sub_vectors(lhs, rhs))
    # cross equation with values in the second algebra
    for i in range(n):
        for j in range(m):
            for k in range(m):
                lhs = rho(phi1[i]).apply(h.basis_bracket(j, k))
                rhs = h.bracket_of(rho(e[i]).apply(f[j]), phi2[k])
                rhs = tuple(a + b for a, b in zip(rhs, h.bracket_of(phi2[j], rho(e[i]).apply(f[k]))))
                rhs = tuple(a + b for a, b in zip(rhs, rho(rhop(f[k]).apply(e[i])).apply(phi2[j])))
                rhs = sub_vectors(rhs, rho(rhop(f[j]).apply(e[i])).apply(phi2[k]))
                _record(failures, "cross-second", (i, j, k), sub_vectors(lhs, rhs))
    return ValidationReport(failures, report.details)


def double_lie(mp):
    """The bracket on the direct sum induced by the mutual actions; accepts candidates."""
    g = mp.first
    h = mp.second
    n = g.dim
    m = h.dim
    total = n + m
    items = {}
    for (i, j, k), c in g.bracket.nonzero_items():
        items[(i, j, k)] = c
    for (i, j, k), c in h.bracket.nonzero_items():
        items[(n + i, n + j, n + k)] = c
    for i in range(n):
        for j in range(m):
            acted = mp.first_action[i].column(j)
            for k, c in enumerate(acted):
                if c != 0:
                    items[(i, n + j, n + k)] = c
                    items[(n + j, i, n + k)] = -c
            acted = mp.second_action[j].column(i)
            for k, c in enumerate(acted):
                if c != 0:
                    items[(i, n + j, k)] = -c
                    items[(n + j, i, k)] = c
    bracket = Tensor3.from_entries((total, total, total), items)
    return HomLieAlgebra(bracket, map_direct_sum(g.twist, h.twist))


def validate_matched_pair_pre_lie(mp):
    """Check both algebras, both mutual action pairs, and the four cross compatibilities."""
    a = mp.first
    b = mp.second
    n = a.dim
    m = b.dim
    named = [("first", validate_hom_pre_lie(a)), ("second", validate_hom_pre_lie(b))]
    if a.twist.is_invertible() and b.twist.is_invertible():
        named.append(("first-action",
                      validate_pre_lie_rep(HomPreLieRep(a, m, b.twist, mp.first_left, mp.first_right))))
        named.append(("second-action",
                      validate_pre_lie_rep(HomPreLieRep(b, n, a.twist, mp.second_left, mp.second_right))))
    report = combine_reports(named)
    failures = list(report.failures)

    e = [basis_vector(n, i) for i in range(n)]
    f = [basis_vector(m, i) for i in range(m)]
    alpha1 = [a.twist.apply(v) for v in e]
    alpha2 = [b.twist.apply(v) for v in f]
    lA = lambda x: _combination(mp.first_left, x, m)
    rA = lambda x: _combination(mp.first_right, x, m)
    lB = lambda x: _combination(mp.second_left, x, n)
    rB = lambda x: _combination(mp.second_right, x, n)

    def add(u, v):
        return tuple(p + q for p, q in zip(u, v))

    # r_A against the second commutator, values in the second algebra
    for i in range(n):
        for j in range(m):
            for k in range(m):
                lhs = rA(alpha1[i]).apply(b.commutator_of(f[j], f[k]))
                rhs = rA(lB(f[k]).apply(e[i])).apply(alpha2[j])
                rhs = sub_vectors(rhs, rA(lB(f[j]).apply(e[i])).apply(alpha2[k]))
                rhs = add(rhs, b.product_of(alpha2[j], rA(e[i]).apply(f[k])))
                rhs = sub_vectors(rhs, b.product_of(alpha2[k], rA(e[i]).apply(f[j])))
                _record(failures, "cross-right-second", (i, j, k), sub_vectors(lhs, rhs))
    # l_A against the second product, values in the second algebra
    for i in range(n):
        for j in range(m):
            for k in range(m):
                lhs = lA(alpha1[i]).apply(b.basis_product(j, k))
                mixed = sub_vectors(lB(f[j]).apply(e[i]), rB(f[j]).apply(e[i]))
                rhs = tuple(-c for c in lA(mixed).apply(alpha2[k]))
                rhs = add(rhs, b.product_of(sub_vectors(lA(e[i]).apply(f[j]), rA(e[i]).apply(f[j])), alpha2[k]))
                rhs = add(rhs, rA(rB(f[k]).apply(e[i])).apply(alpha2[j]))
                rhs = add(rhs, b.product_of(alpha2[j], lA(e[i]).apply(f[k])))
                _record(failures, "cross-left-second", (i, j, k), sub_vectors(lhs, rhs))
    # r_B against the first commutator, values in the first algebra
    for k in range(m):
        for i in range(n):
            for j in range(n):
                lhs = rB(alpha2[k]).apply(a.commutator_of(e[i], e[j]))
                rhs = rB(lA(e[j]).apply(f[k])).apply(alpha1[i])
                rhs = sub_vectors(rhs, rB(lA(e[i]).apply(f[k])).apply(alpha1[j]))
                rhs = add(rhs, a.product_of(alpha1[i], rB(f[k]).apply(e[j])))
                rhs = sub_vectors(rhs, a.product_of(alpha1[j], rB(f[k]).apply(e[i])))
                _record(failures, "cross-right-first", (k, i, j), sub_vectors(lhs, rhs))
    # l_B against the first product, values in the first algebra
    for k in range(m):
        for i in range(n):
            for j in range(n):
                lhs = lB(alpha2[k]).apply(a.basis_product(i, j))
                mixed = sub_vectors(lA(e[i]).apply(f[k]), rA(e[i]).apply(f[k]))
                rhs = tuple(-c for c in lB(mixed).apply(alpha1[j]))
                rhs = add(rhs, a.product_of(sub_vectors(lB(f[k]).apply(e[i]), rB(f[k]).apply(e[i])), alpha1[j]))
                rhs = add(rhs, rB(rA(e[j]).apply(f[k])).apply(alpha1[i]))
                rhs = add(rhs, a.product_of(alpha1[i], lB(f[k]).apply(e[j])))
                _record(failures, "cross-left-first", (k, i, j), sub_vectors(lhs, rhs))
    return ValidationReport(failures, report.details)


def double_pre_lie(mp):
    """The product on the direct sum induced by the mutual actions; accepts candidates."""
    a = mp.first
    b = mp.second
    n = a.dim
    m = b.dim
    total = n + m
    items = {}
    for (i, j, k), c in a.product.nonzero_items():
        items[(i, j, k)] = c
    for (i, j, k), c in b.product.nonzero_items():
        items[(n + i, n + j, n + k)] = c
    for i in range(n):
        for j in range(m):
            part = mp.second_right[j].column(i)
            for k, c in enumerate(part):
                if c != 0:
                    items[(i, n + j, k)] = c
            part = mp.first_left[i].column(j)
            for k, c in enumerate(part):
                if c != 0:
                    items[(i, n + j, n + k)] = c
            part = mp.second_left[j].column(i)
            for k, c in enumerate(part):
                if c != 0:
                    items[(n + j, i, k)] = c
            part = mp.first_right[i].column(j)
            for k, c in enumerate(part):
                if c != 0:
                    items[(n + j, i, n + k)] = c
    product = Tensor3.from_entries((total, total, total), items)
    return HomPreLieAlgebra(product, map_direct_sum(a.twist, b.twist))


def require_dual_twists(a, adual):
    """Both algebras must have equal dimension and mutually inverse-dual twists."""
    if a.dim != adual.dim:
        raise DimensionMismatch("dims %d and %d" % (a.dim, adual.dim))
    if adual.twist != a.twist.inverse().transpose():
        raise TwistMismatch("second twist is not the inverse dual of the first")


def coadjoint_matched_pair(a, adual):
    """The canonical candidate pair: each algebra acts on the other's dual space
    through the twisted dual of its commutator and right multiplication families."""
    require_dual_twists(a, adual)
    n = a.dim
    e = [basis_vector(n, i) for i in range(n)]
    ad_first = [a.left_matrix(v) - a.right_matrix(v) for v in e]
    right_first = [a.right_matrix(v) for v in e]
    ad_second = [adual.left_matrix(v) - adual.right_matrix(v) for v in e]
    right_second = [adual.right_matrix(v) for v in e]
    first_left = star_maps(ad_first, a.twist, a.twist)
    first_right = tuple(-mm for mm in star_maps(right_first, a.twist, a.twist))
    second_left = star_maps(ad_second, adual.twist, adual.twist)
    second_right = tuple(-mm for mm in star_maps(right_second, adual.twist, adual.twist))
    return PreLieMatchedPair(a, adual, first_left, first_right, second_left, second_right)


def coadjoint_lie_matched_pair(a, adual):
    """The Lie-side counterpart: commutator algebras acting through twisted duals
    of the left multiplication families."""
    require_dual_twists(a, adual)
    n = a.dim
    e = [basis_vector(n, i) for i in range(n)]
    left_first = [a.left_matrix(v) for v in e]
    left_second = [adual.left_matrix(v) for v in e]
    lie_a = HomLieAlgebra(a.commutator_tensor(), a.twist)
    lie_d = HomLieAlgebra(adual.commutator_tensor(), adual.twist)
    return LieMatchedPair(lie_a, lie_d,
                          star_maps(left_first, a.twist, a.twist),
                          star_maps(left_second, adual.twist, adual.twist))


def check_pre_lie_matched_equiv(a, adual):
    """Both canonical pairs must be matched pairs together or fail together."""
    require_dual_twists(a, adual)
    lie_report = validate_matched_pair_lie(coadjoint_lie_matched_pair(a, adual))
    pre_report = validate_matched_pair_pre_lie(coadjoint_matched_pair(a, adual))
    agree = lie_report.valid == pre_report.valid
    failures = [] if agree else [Failure("verdict-agreement", (), ())]
    return ValidationReport(failures, {"lie": lie_report, "pre_lie": pre_report, "agree": agree})


class ManinTriple:
    """A quadratic algebra split into two isotropic subalgebra slots: the first
    first_dim basis vectors and the remaining second_dim basis vectors."""

    __slots__ = ("total", "form", "first_dim", "second_dim")

    def __init__(self, total, form, first_dim, second_dim):
        if first_dim + second_dim != total.dim:
            raise DimensionMismatch("split %d + %d for dim %d" % (first_dim, second_dim, total.dim))
        if form.dim != total.dim:
            raise DimensionMismatch("form dim %d for dim %d" % (form.dim, total.dim))
        if form.symmetry != "skew":
            raise AsymmetricInput("the invariant form of a Manin triple is skew")
        self.total = total
        self.form = form
        self.first_dim = first_dim
        self.second_dim = second_dim

    def __eq__(self, other):
        if not isinstance(other, ManinTriple):
            return NotImplemented
        return ((self.total, self.form, self.first_dim, self.second_dim) ==
                (other.total, other.form, other.first_dim, other.second_dim))

    def __repr__(self):
        return "ManinTriple(%d + %d)" % (self.first_dim, self.second_dim)


def validate_manin_triple(mt):
    """Check total validity, the quadratic conditions, isotropy, closure, and a
    block-diagonal twist."""
    total = mt.total
    n1 = mt.first_dim
    dim = total.dim
    named = [("total", validate_hom_pre_lie(total)), ("quadratic", validate_quadratic(total, mt.form))]
    report = combine_reports(named)
    failures = list(report.failures)
    basis = [basis_vector(dim, i) for i in range(dim)]
    ranges = (("first", range(0, n1), range(n1, dim)),
              ("second", range(n1, dim), range(0, n1)))
    for name, inside, outside in ranges:
        for i in inside:
            for j in inside:
                value = mt.form.apply(basis[i], basis[j])
                if value != 0:
                    failures.append(Failure(name + "-isotropic", (i, j), (value,)))
                leak = [total.basis_product(i, j)[k] for k in outside]
                _record(failures, name + "-closed", (i, j), tuple(leak))
    for i in range(dim):
        for j in range(dim):
            same_block = (i < n1) == (j < n1)
            if not same_block and total.twist.entries[i][j] != 0:
                failures.append(Failure("twist-block-diagonal", (i, j), (total.twist.entries[i][j],)))
    return ValidationReport(failures, report.details)


def standard_manin_triple(a, adual):
    """The double of the canonical pair with the tautological skew pairing."""
    require_dual_twists(a, adual)
    n = a.dim
    total = double_pre_lie(coadjoint_matched_pair(a, adual))
    entries = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        entries[i][n + i] = -1
        entries[n + i][i] = 1
    form = BilinearForm(Tensor2(tuple(tuple(row) for row in entries), 2 * n, 2 * n), "skew")
    return ManinTriple(total, form, n, n)


StandardizedTriple = namedtuple("StandardizedTriple", ["iso", "standard"])


def standardize_manin_triple(mt):
    """Rewrite a valid Manin triple as the standard one on the first slot and its
    dual, with the structure-preserving isomorphism sending u to form(u, .)."""
    if not validate_manin_triple(mt).valid:
        raise InvalidInput("standardize_manin_triple needs a valid Manin triple")
    n1 = mt.first_dim
    n2 = mt.second_dim
    if n1 != n2:
        raise InvalidInput("a nondegenerate isotropic split needs equal slot dimensions")
    total = mt.total
    dim = total.dim
    basis = [basis_vector(dim, i) for i in range(dim)]
    pairing = LinearMap(tuple(tuple(mt.form.apply(basis[n1 + j], basis[i]) for j in range(n2))
                              for i in range(n1)), rows=n1, cols=n2)
    pairing_inv = pairing.inverse()

    first_product = Tensor3.from_entries(
        (n1, n1, n1),
        {(i, j, k): total.basis_product(i, j)[k]
         for i in range(n1) for j in range(n1) for k in range(n1)
         if total.basis_product(i, j)[k] != 0})
    first_twist = LinearMap(tuple(tuple(total.twist.entries[i][j] for j in range(n1)) for i in range(n1)),
                            rows=n1, cols=n1)
    first = HomPreLieAlgebra(first_product, first_twist)

    second_block = Tensor3.from_entries(
        (n2, n2, n2),
        {(i, j, k): total.basis_product(n1 + i, n1 + j)[n1 + k]
         for i in range(n2) for j in range(n2) for k in range(n2)
         if total.basis_product(n1 + i, n1 + j)[n1 + k] != 0})
    dual_items = {}
    for i in range(n2):
        for j in range(n2):
            vec = pairing.apply(apply_bilinear(second_block, pairing_inv.column(i), pairing_inv.column(j)))
            for k, c in enumerate(vec):
                if c != 0:
                    dual_items[(i, j, k)] = c
    dual_product = Tensor3.from_entries((n2, n2, n2), dual_items)
    expected_twist = first_twist.inverse().transpose()
    second_twist = LinearMap(tuple(tuple(total.twist.entries[n1 + i][n1 + j] for j in range(n2))
                                   for i in range(n2)), rows=n2, cols=n2)
    if pairing @ second_twist @ pairing_inv != expected_twist:
        raise InvalidInput("the second slot's twist does not transport to the inverse dual twist")
    dual = HomPreLieAlgebra(dual_product, expected_twist)

    iso = map_direct_sum(LinearMap.identity(n1), pairing)
    return StandardizedTriple(iso=iso, standard=standard_manin_triple(first, dual))

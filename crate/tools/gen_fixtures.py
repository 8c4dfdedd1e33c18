#!/usr/bin/env python3
"""Generate the fixture table files in crates/chillag-cli/fixtures/.

Brauer character tables for the defining characteristic of three small
simple groups of Lie type, plus the projective indecomposable table for
PSL(2,16) at p=2 and an ordinary table for S3.

The irreducible 2-modular (resp. 3-modular) representations in defining
characteristic are the twisted tensor products of Frobenius twists of the
basic module(s) (Steinberg's tensor product theorem).  Brauer values are
sums of Teichmueller lifts of Frobenius eigenvalues, computed here as
formal sums of roots of unity (dicts exponent -> integer coefficient).

For the PSL groups the script verifies the rows exactly by decomposing
every ordinary irreducible character (restricted to p-regular classes)
as a nonnegative integer combination of the rows.  For Sz(32) the group
is constructed as explicit 4x4 matrices over F_{2^20} and the eigenvalue
data is read off actual group elements.
"""

import math
import os
import random
from fractions import Fraction

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "chillag-cli", "fixtures")

# ---------------------------------------------------------------------------
# formal sums of roots of unity: dict {exponent mod d: integer coefficient}


def conv(p, q, d):
    r = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = (e1 + e2) % d
            r[e] = r.get(e, 0) + c1 * c2
    return {e: c for e, c in r.items() if c}


def addv(p, q, d, scale=1):
    r = dict(p)
    for e, c in q.items():
        e %= d
        r[e] = r.get(e, 0) + scale * c
    return {e: c for e, c in r.items() if c}


def root_sum(d, exps):
    r = {}
    for e in exps:
        e %= d
        r[e] = r.get(e, 0) + 1
    return {e: c for e, c in r.items() if c}


def lit(d, dic):
    """Emit the E(n,k) literal for a formal root sum."""
    if not dic:
        return "0"
    if set(dic) == {0}:
        return str(dic[0])
    parts = []
    for e in sorted(dic):
        c = dic[e]
        if e == 0:
            t = str(abs(c))
        elif abs(c) == 1:
            t = f"E({d},{e})"
        else:
            t = f"{abs(c)}*E({d},{e})"
        parts.append(("-" if c < 0 else "+", t))
    s = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
    for sign, t in parts[1:]:
        s += sign + t
    return s


def numeric(d, dic, t=1):
    """Complex value of the Galois image sigma_t of a root sum."""
    return sum(c * complex(math.cos(2 * math.pi * t * e / d), math.sin(2 * math.pi * t * e / d)) for e, c in dic.items())


def is_rational(d, dic):
    for t in range(2, d):
        if math.gcd(t, d) != 1:
            continue
        if abs(numeric(d, dic, t) - numeric(d, dic)) > 1e-6:
            return False
    return True


# exact equality of root sums via reduction mod the cyclotomic polynomial
PHI = {
    1: [1],
    15: [1, -1, 0, 1, -1, 1, 0, -1, 1],  # x^8-x^7+x^5-x^4+x^3-x+1 (low degree first)
    17: [1] * 17,
    13: [1] * 13,
    28: [1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1],  # Phi_28 = Phi_14(x^2)
}


def reduce_mod_phi(d, dic):
    phi = PHI[d]
    deg = len(phi) - 1
    coeffs = [0] * d
    for e, c in dic.items():
        coeffs[e % d] += c
    for i in range(d - 1, deg - 1, -1):
        lead = Fraction(coeffs[i])
        if lead == 0:
            continue
        for j, pc in enumerate(phi):
            coeffs[i - deg + j] -= lead * pc
    return coeffs[:deg]


def exact_eq(d, p, q):
    diff = addv(p, q, d, scale=-1)
    return all(c == 0 for c in reduce_mod_phi(d, diff))


# ---------------------------------------------------------------------------
# fixture writing


def write_fixture(fname, name, comments, order, kind, prime, class_orders, row_lits):
    n = len(class_orders)
    assert len(row_lits) == n and all(len(r) == n for r in row_lits)
    lines = [f"#table {name}"]
    lines += [f"# {c}" for c in comments]
    lines.append(f"order {order}")
    lines.append(f"kind {kind}")
    if prime is not None:
        lines.append(f"prime {prime}")
    lines.append(f"classes {n}")
    lines.append("class_orders " + ",".join(str(o) for o in class_orders))
    for r in row_lits:
        lines.append(",".join(r))
    path = os.path.join(OUT, fname)
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {path} ({n} classes)")


def check_irrational(name, columns):
    """columns: list of (d, dict); require at least one irrational column sum."""
    bad = [j for j, (d, dic) in enumerate(columns) if not is_rational(d, dic)]
    assert bad, f"{name}: all column sums rational, expected a counterexample"
    print(f"  {name}: irrational column sums at columns {[j + 1 for j in bad]}")


def column_sums(classes, rows):
    sums = []
    for j, (d, _k) in enumerate(classes):
        acc = {}
        for row in rows:
            acc = addv(acc, row[j], d)
        sums.append((d, acc))
    return sums


# ---------------------------------------------------------------------------
# PSL(2,16) at p=2

def subsets(base):
    out = [[]]
    for x in base:
        out += [s + [x] for s in out]
    return out


def psl2_16_brauer():
    # 2-regular classes: identity, split torus C15 (classes {a,-a}),
    # nonsplit torus C17 (classes {b,-b}).  Eigenvalues of the natural
    # 2-dimensional module on the class parameter k are zeta_d^{+-k}.
    classes = [(15, 0), (15, 5), (15, 3), (15, 6), (15, 1), (15, 2), (15, 4), (15, 7)]
    classes += [(17, b) for b in range(1, 9)]
    class_orders = [1, 3, 5, 5, 15, 15, 15, 15] + [17] * 8

    row_sets = sorted(subsets(range(4)), key=lambda s: (len(s), s))
    rows = []
    for S in row_sets:
        row = []
        for d, k in classes:
            v = {0: 1}
            for i in S:
                v = conv(v, root_sum(d, [(1 << i) * k, -(1 << i) * k]), d)
            row.append(v)
        rows.append(row)
    return classes, class_orders, row_sets, rows


def psl2_16_ordinary(classes):
    # closed-form ordinary table; columns are the 16 2-regular classes in
    # the same order as the Brauer rows (the order-2 unipotent class is
    # dropped).  chars: 1, St(16), seven of degree 17, eight of degree 15.
    chars = []
    chars.append([{0: 1} for _ in classes])  # trivial
    st = []
    for d, k in classes:
        if k == 0:
            st.append({0: 16})
        elif d == 15:
            st.append({0: 1})
        else:
            st.append({0: -1})
    chars.append(st)
    for alpha in range(1, 8):
        row = []
        for d, k in classes:
            if k == 0:
                row.append({0: 17})
            elif d == 15:
                row.append(root_sum(15, [alpha * k, -alpha * k]))
            else:
                row.append({})
        chars.append(row)
    for beta in range(1, 9):
        row = []
        for d, k in classes:
            if k == 0:
                row.append({0: 15})
            elif d == 15:
                row.append({})
            else:
                row.append(addv({}, root_sum(17, [beta * k, -beta * k]), 17, scale=-1))
        chars.append(row)
    return chars


# ---------------------------------------------------------------------------
# PSL(2,27) at p=3

def sym_factor(d, base, a):
    # Brauer value of Sym^a of the natural module at eigenvalue zeta_d^base
    return root_sum(d, [base * (a - 2 * r) for r in range(a + 1)])


def psl2_27_brauer():
    # 3-regular classes: identity; nonsplit torus C14 (involution j=7,
    # order 7 for j=2,4,6, order 14 for j=1,3,5; lift zeta_28^j); split
    # torus C13 (c=1..6, lift zeta_13^{7c} since 7 = 1/2 mod 13).
    classes = [(13, 0), (28, 7), (28, 2), (28, 4), (28, 6)]
    classes += [(13, 7 * c % 13) for c in range(1, 7)]
    classes += [(28, 1), (28, 3), (28, 5)]
    class_orders = [1, 2, 7, 7, 7, 13, 13, 13, 13, 13, 13, 14, 14, 14]

    tuples = [
        (a0, a1, a2)
        for a0 in range(3)
        for a1 in range(3)
        for a2 in range(3)
        if (a0 + a1 + a2) % 2 == 0
    ]
    tuples.sort(key=lambda t: ((t[0] + 1) * (t[1] + 1) * (t[2] + 1), t))
    rows = []
    for t in tuples:
        row = []
        for d, k in classes:
            v = {0: 1}
            for i, a in enumerate(t):
                v = conv(v, sym_factor(d, (3**i) * k % d, a), d)
            row.append(v)
        rows.append(row)
    return classes, class_orders, tuples, rows


def psl2_27_ordinary(classes):
    # chars: 1, St(27), six of degree 28 (split series), six of degree 26
    # (nonsplit series), two of degree 13 (halves of the order-2 nonsplit
    # character; they agree on 3-regular classes).
    chars = []
    chars.append([{0: 1} for _ in classes])
    st = []
    for d, k in classes:
        if k == 0:
            st.append({0: 27})
        elif d == 13:
            st.append({0: 1})
        else:
            st.append({0: -1})
    chars.append(st)
    inv2 = 7  # 1/2 mod 13; split class c has lift exponent 7c
    for alpha in range(1, 7):
        row = []
        for d, k in classes:
            if k == 0:
                row.append({0: 28})
            elif d == 13:
                # class parameter c recovered from lift exponent k = 7c
                c = k * 2 % 13
                row.append(root_sum(13, [alpha * c, -alpha * c]))
            else:
                row.append({})
        chars.append(row)
    for beta in range(1, 7):
        row = []
        for d, k in classes:
            if k == 0:
                row.append({0: 26})
            elif d == 13:
                row.append({})
            else:
                # nonsplit class j has lift exponent k = j; theta_beta value
                # is -(zeta_14^{beta j} + zeta_14^{-beta j})
                row.append(addv({}, root_sum(28, [2 * beta * k, -2 * beta * k]), 28, scale=-1))
        chars.append(row)
    for _half in range(2):
        row = []
        for d, k in classes:
            if k == 0:
                row.append({0: 13})
            elif d == 13:
                row.append({})
            else:
                row.append({0: -((-1) ** k)})
        chars.append(row)
    return chars


# ---------------------------------------------------------------------------
# exact decomposition check: every ordinary character restricted to the
# p-regular classes must be a nonnegative integer combination of the rows


def gauss_solve(a, b):
    """Exact Fraction solve of the square system a x = b."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1, 1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def rational_coords(classes, row):
    """Flatten a character row into exact rational coordinates."""
    out = []
    for (d, _k), dic in zip(classes, row):
        out.extend(Fraction(c) for c in reduce_mod_phi(d, dic))
    return out


def decomposition_matrix(name, classes, brows, chars):
    coords = [rational_coords(classes, r) for r in brows]
    n = len(brows)
    # pick n independent coordinate positions by Gaussian elimination
    work = [row[:] for row in coords]
    cols = []
    r = 0
    for c in range(len(coords[0])):
        piv = next((i for i in range(r, n) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = Fraction(1, 1) / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(n):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        cols.append(c)
        r += 1
        if r == n:
            break
    assert r == n, f"{name}: rows are linearly dependent"
    a = [[coords[i][c] for i in range(n)] for c in cols]
    dmat = []
    for chi in chars:
        target = rational_coords(classes, chi)
        x = gauss_solve(a, [target[c] for c in cols])
        assert all(v.denominator == 1 and v >= 0 for v in x), f"{name}: non-integral decomposition {x}"
        # verify on every class, not just the pivot coordinates
        for j, (d, _k) in enumerate(classes):
            lhs = {}
            for coef, row in zip(x, brows):
                lhs = addv(lhs, row[j], d, scale=int(coef))
            assert exact_eq(d, lhs, chi[j]), f"{name}: decomposition check failed at class {j}"
        dmat.append([int(v) for v in x])
    print(f"  {name}: all {len(chars)} ordinary characters decompose with nonnegative integers")
    return dmat


# ---------------------------------------------------------------------------
# Sz(32) at p=2, via explicit 4x4 matrices over F_{2^20}

POLY = (1 << 20) | (1 << 3) | 1  # x^20 + x^3 + 1, primitive
FORDER = (1 << 20) - 1  # 3 * 5^2 * 11 * 31 * 41


def gmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & (1 << 20):
            a ^= POLY
    return r


def gpow(a, e):
    if a == 0:
        return 0
    e %= FORDER
    r = 1
    while e:
        if e & 1:
            r = gmul(r, a)
        a = gmul(a, a)
        e >>= 1
    return r


def ginv(a):
    return gpow(a, FORDER - 1)


def mmul(x, y):
    return tuple(
        tuple(
            gmul(x[i][0], y[0][j]) ^ gmul(x[i][1], y[1][j]) ^ gmul(x[i][2], y[2][j]) ^ gmul(x[i][3], y[3][j])
            for j in range(4)
        )
        for i in range(4)
    )


MID = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))


def mpow(m, e):
    r = MID
    while e:
        if e & 1:
            r = mmul(r, m)
        m = mmul(m, m)
        e >>= 1
    return r


def det4(m):
    def det2(a, b, c, d):
        return gmul(a, d) ^ gmul(b, c)

    total = 0
    for j in range(4):
        rest = [m[i][:j] + m[i][j + 1 :] for i in range(1, 4)]
        minor = (
            gmul(rest[0][0], det2(rest[1][1], rest[1][2], rest[2][1], rest[2][2]))
            ^ gmul(rest[0][1], det2(rest[1][0], rest[1][2], rest[2][0], rest[2][2]))
            ^ gmul(rest[0][2], det2(rest[1][0], rest[1][1], rest[2][0], rest[2][1]))
        )
        total ^= gmul(m[0][j], minor)
    return total


def sz32_group():
    assert gpow(2, FORDER) == 1
    for p in (3, 5, 11, 31, 41):
        assert gpow(2, FORDER // p) != 1, "x is not primitive"
    z = gpow(2, FORDER // 31)  # generates the F_32 subfield

    def sg(a):
        return gpow(a, 8)  # the Suzuki field automorphism on F_32

    def unip(a, b):
        # lower unitriangular Suzuki generator; verified below against the
        # twisted multiplication law and the symplectic form
        a1 = gmul(a, sg(a))  # a^(1+8)
        return (
            (1, 0, 0, 0),
            (a, 1, 0, 0),
            (b, sg(a), 1, 0),
            (gmul(a, a1) ^ gmul(a, b) ^ sg(b), a1 ^ b, a, 1),
        )

    def kappa(lam):
        li = ginv(lam)
        return (
            (gpow(lam, 5), 0, 0, 0),
            (0, gpow(lam, 4), 0, 0),
            (0, 0, gpow(li, 4), 0),
            (0, 0, 0, gpow(li, 5)),
        )

    w = tuple(tuple(1 if i + j == 3 else 0 for j in range(4)) for i in range(4))

    rng = random.Random(2024)
    f32 = [0] + [gpow(z, k) for k in range(31)]
    jform = w  # antidiagonal ones

    def preserves_form(m):
        mt = tuple(tuple(m[j][i] for j in range(4)) for i in range(4))
        return mmul(mmul(mt, jform), m) == jform

    for _ in range(20):
        a, b, c, d = (rng.choice(f32) for _ in range(4))
        lhs = mmul(unip(a, b), unip(c, d))
        rhs = unip(a ^ c, b ^ d ^ gmul(sg(a), c))
        assert lhs == rhs, "unipotent multiplication law failed"
        assert preserves_form(unip(a, b))
        assert preserves_form(kappa(rng.choice(f32[1:])))
    assert preserves_form(w)

    gens = [unip(z, 0), unip(0, z), kappa(z), w]
    return z, gens, rng


def elt_order(m):
    for d in (1, 2, 4, 5, 25, 31, 41):
        if mpow(m, d) == MID:
            return d
    return None


def eigen_exponents(m, d):
    wroot = gpow(2, FORDER // d)
    exps = []
    for k in range(d):
        c = gpow(wroot, k)
        shifted = tuple(tuple(m[i][j] ^ (c if i == j else 0) for j in range(4)) for i in range(4))
        if det4(shifted) == 0:
            exps.append(k)
    assert len(exps) == 4, f"expected 4 distinct eigenvalues, got {exps}"
    return exps


def sz32_brauer():
    z, gens, rng = sz32_group()
    found = {}
    tries = 0
    while len(found) < 3 and tries < 4000:
        tries += 1
        m = MID
        for _ in range(rng.randrange(8, 16)):
            m = mmul(m, rng.choice(gens))
        o = elt_order(m)
        assert o is not None, "element order outside Sz(32) spectrum"
        if o in (25, 31, 41) and o not in found:
            found[o] = m
    assert set(found) == {25, 31, 41}, f"missing torus elements, found {sorted(found)}"

    patterns = {}
    for d, m in found.items():
        exps = eigen_exponents(m, d)
        patterns[d] = exps
        print(f"  Sz(32): order {d} element has eigenvalue exponents {exps}")

    classes = [(31, 0)]
    class_orders = [1]
    ordered = []
    for d in (25, 31, 41):
        exps = patterns[d]
        eset = frozenset(exps)
        stab = [u for u in range(1, d) if math.gcd(u, d) == 1 and frozenset(u * e % d for e in exps) == eset]
        seen = set()
        reps = []
        for k in range(1, d):
            if k in seen:
                continue
            orbit = {u * k % d for u in stab}
            seen |= orbit
            reps.append(k)
        expected = {25: 6, 31: 15, 41: 10}[d]
        assert len(reps) == expected, f"d={d}: {len(reps)} classes, expected {expected}"
        for k in reps:
            order = d // math.gcd(d, k)
            ordered.append((order, d, k))
    ordered.sort()
    for order, d, k in ordered:
        classes.append((d, k))
        class_orders.append(order)

    row_sets = sorted(subsets(range(5)), key=lambda s: (len(s), s))
    rows = []
    for S in row_sets:
        row = []
        for d, k in classes:
            v = {0: 1}
            for i in S:
                v = conv(v, root_sum(d, [(1 << i) * k * e for e in patterns[d]]), d)
            row.append(v)
        rows.append(row)

    # rows must be linearly independent to be a Brauer character basis
    mat = [[numeric(d, dic) for (d, _k), dic in zip(classes, row)] for row in rows]
    n = len(mat)
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(mat[r][col]))
        assert abs(mat[piv][col]) > 1e-6, "Sz(32) Brauer rows are linearly dependent"
        mat[col], mat[piv] = mat[piv], mat[col]
        for r in range(n):
            if r != col:
                f = mat[r][col] / mat[col][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return classes, class_orders, row_sets, rows


# ---------------------------------------------------------------------------


def main():
    os.makedirs(OUT, exist_ok=True)

    # ---- PSL(2,16) mod 2 Brauer
    classes, orders, row_sets, rows = psl2_16_brauer()
    chars = psl2_16_ordinary(classes)
    assert sum(numeric(1, c[0]).real ** 2 for c in chars) == 4080
    dmat = decomposition_matrix("psl2_16 mod 2", classes, rows, chars)
    lits = [[lit(d, v) for (d, _k), v in zip(classes, row)] for row in rows]
    write_fixture(
        "psl2_16_mod2_brauer.tbl",
        "psl2_16_mod2_brauer",
        [
            "2-modular Brauer character table of PSL(2,16), |G| = 4080.",
            "Rows: tensor products of Frobenius twists of the natural 2-dim module",
            "(Steinberg tensor product theorem), indexed by subsets of {0,1,2,3}.",
            "Columns: the 16 odd-order classes; torus parameters a in C15, b in C17.",
            "Values are sums of Teichmueller lifts of Frobenius eigenvalues.",
        ],
        4080,
        "brauer",
        2,
        orders,
        lits,
    )
    check_irrational("psl2_16_mod2_brauer", column_sums(classes, rows))

    # ---- PSL(2,16) mod 2 projective indecomposables
    pims = []
    for i in range(len(rows)):
        pim = [{} for _ in classes]
        for chi, drow in zip(chars, dmat):
            if drow[i]:
                for j, (d, _k) in enumerate(classes):
                    pim[j] = addv(pim[j], chi[j], d, scale=drow[i])
        deg = pim[0].get(0, 0)
        assert deg % 16 == 0, f"PIM degree {deg} not divisible by |G|_2"
        pims.append(pim)
    pim_lits = [[lit(d, v) for (d, _k), v in zip(classes, pim)] for pim in pims]
    write_fixture(
        "psl2_16_mod2_pim.tbl",
        "psl2_16_mod2_pim",
        [
            "Projective indecomposable characters of PSL(2,16) at p=2,",
            "restricted to the 16 odd-order classes.  Row i is the column i of",
            "the decomposition matrix paired with the ordinary table:",
            "Phi_i = sum_chi d_{chi,i} chi.  Same class order as the Brauer table.",
        ],
        4080,
        "pim",
        2,
        orders,
        pim_lits,
    )
    check_irrational("psl2_16_mod2_pim", column_sums(classes, pims))

    # ---- PSL(2,27) mod 3 Brauer
    classes, orders, tuples, rows = psl2_27_brauer()
    chars = psl2_27_ordinary(classes)
    assert sum(numeric(1, c[0]).real ** 2 for c in chars) == 9828
    decomposition_matrix("psl2_27 mod 3", classes, rows, chars)
    lits = [[lit(d, v) for (d, _k), v in zip(classes, row)] for row in rows]
    write_fixture(
        "psl2_27_mod3_brauer.tbl",
        "psl2_27_mod3_brauer",
        [
            "3-modular Brauer character table of PSL(2,27), |G| = 9828.",
            "Rows: twisted tensor products Sym^a0 V x (Sym^a1 V)^(3) x (Sym^a2 V)^(9)",
            "over tuples with a0+a1+a2 even (those factoring through the centre).",
            "Columns: the 14 classes of order coprime to 3; tori C13 and C14.",
        ],
        9828,
        "brauer",
        3,
        orders,
        lits,
    )
    check_irrational("psl2_27_mod3_brauer", column_sums(classes, rows))

    # ---- Sz(32) mod 2 Brauer
    classes, orders, row_sets, rows = sz32_brauer()
    lits = [[lit(d, v) for (d, _k), v in zip(classes, row)] for row in rows]
    write_fixture(
        "sz32_mod2_brauer.tbl",
        "sz32_mod2_brauer",
        [
            "2-modular Brauer character table of the Suzuki group Sz(32),",
            "|G| = 32537600.  Rows: tensor products of Frobenius twists of the",
            "natural 4-dim symplectic module, indexed by subsets of {0..4}.",
            "Columns: the 32 odd-order classes, from tori of orders 25, 31, 41;",
            "eigenvalue data computed from explicit matrices over F_{2^20}.",
        ],
        32537600,
        "brauer",
        2,
        orders,
        lits,
    )
    check_irrational("sz32_mod2_brauer", column_sums(classes, rows))

    # ---- ordinary S3, the smoke-test fixture
    write_fixture(
        "s3_ordinary.tbl",
        "s3_ordinary",
        ["Ordinary character table of the symmetric group S3."],
        6,
        "ordinary",
        None,
        [1, 2, 3],
        [["1", "1", "1"], ["1", "-1", "1"], ["2", "0", "-1"]],
    )


if __name__ == "__main__":
    main()

"""Hot integer kernels, pure-Python edition.

``poly_mul`` multiplies integer coefficient vectors through Kronecker
substitution (one bignum product instead of a convolution loop),
``cyclo_mul`` folds such a product back below the cyclotomic degree,
``bareiss_det`` is a fraction-free determinant with a banded fast lane, and
``hermitian_inertia`` is the pivoting engine behind every exact signature in
the package.  The compiled twin in ``_speedups.pyx`` mirrors this module
function for function; ``shakeslice._kernels`` exports whichever imports.

gmpy2 (a hard dependency, but guarded so the module stays importable without
it) supplies subquadratic bignum multiplication for the packed products.
"""

from __future__ import annotations

IMPL = "pure"

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is in the dependency list
    _mpz = None


def _wrap(x):
    return _mpz(x) if _mpz is not None else x


def _pack(vec, width):
    acc = _wrap(0)
    for c in reversed(vec):
        acc = (acc << width) + c
    return acc


def _unpack(total, width, count):
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    full = 1 << width
    out = []
    for _ in range(count):
        r = int(total & mask)
        if r >= half:
            r -= full
        out.append(r)
        total = (total - r) >> width
    if total:
        raise AssertionError("packed product left a nonzero carry")
    return out


def poly_mul(a, b):
    """Exact convolution of two integer sequences (ascending exponents).

    The limb width is sized so every convolution coefficient fits strictly
    inside a signed limb, making the balanced digit extraction exact.
    """
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    if la == 1:
        s = a[0]
        return [s * c for c in b]
    if lb == 1:
        s = b[0]
        return [c * s for c in a]
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return [0] * (la + lb - 1)
    width = ma.bit_length() + mb.bit_length() + min(la, lb).bit_length() + 2
    return _unpack(_pack(a, width) * _pack(b, width), width, la + lb - 1)


def cyclo_mul(a, b, red):
    """Product of two residues mod a degree-d modulus with reduction table.

    ``a`` and ``b`` are length-d integer vectors (coefficients of degree < d
    representatives); ``red[e - d]`` is the reduction row for t^e, for
    e = d .. 2d-2.
    """
    d = len(a)
    if d == 1:
        return [a[0] * b[0]]
    conv = poly_mul(a, b)
    out = conv[:d]
    for e in range(d, len(conv)):
        c = conv[e]
        if c:
            row = red[e - d]
            for i in range(d):
                ri = row[i]
                if ri:
                    out[i] += c * ri
    return out


def vec_scalar_divexact(vec, n):
    """Divide every entry by the integer n, asserting exactness."""
    out = []
    for c in vec:
        q, r = divmod(c, n)
        if r:
            raise AssertionError("inexact division in fraction-free elimination")
        out.append(q)
    return out


def _dense_det(a, m):
    sign = 1
    prev = None
    for k in range(m - 1):
        if not a[k][k]:
            for r in range(k + 1, m):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k]
        row_k = a[k]
        for i in range(k + 1, m):
            row_i = a[i]
            aik = row_i[k]
            if prev is None:
                for j in range(k + 1, m):
                    row_i[j] = p * row_i[j] - aik * row_k[j]
            else:
                for j in range(k + 1, m):
                    row_i[j] = (p * row_i[j] - aik * row_k[j]) // prev
        prev = p
    return sign * a[m - 1][m - 1]


def _banded_det(a, band):
    # Lazy-activation banded Bareiss.  An entry (i, j) with max(i, j) > k+band
    # has an all-zero border against the leading k block, so its bordered
    # minor is just D_k * orig[i][j]; it is materialised with that value when
    # it first enters the elimination window.
    m = len(a)
    orig = [row[:] for row in a]
    prev = None
    for k in range(m - 1):
        e = k + band
        if e < m and prev is not None:
            for i in range(k, e + 1):
                a[i][e] = prev * orig[i][e]
                if i != e:
                    a[e][i] = prev * orig[e][i]
        p = a[k][k]
        if not p:
            # Zero pivot: materialise the trailing block, finish dense, and
            # undo the uniform D_k scale (det R = prev^(t-1) * det of the
            # remaining factor).
            t = m - k
            blk = [[None] * t for _ in range(t)]
            for i in range(k, m):
                for j in range(k, m):
                    if max(i, j) <= e:
                        blk[i - k][j - k] = a[i][j]
                    elif prev is not None:
                        blk[i - k][j - k] = prev * orig[i][j]
                    else:
                        blk[i - k][j - k] = orig[i][j]
            dd = _dense_det(blk, t)
            if prev is None:
                return dd
            q, r = divmod(dd, prev ** (t - 1))
            if r:
                raise AssertionError("inexact banded determinant correction")
            return q
        hi = min(e, m - 1)
        row_k = a[k]
        for i in range(k + 1, hi + 1):
            row_i = a[i]
            aik = row_i[k]
            if prev is None:
                for j in range(k + 1, hi + 1):
                    row_i[j] = p * row_i[j] - aik * row_k[j]
            else:
                for j in range(k + 1, hi + 1):
                    row_i[j] = (p * row_i[j] - aik * row_k[j]) // prev
        prev = p
    return a[m - 1][m - 1]


def bareiss_det(rows, band=None):
    """Exact determinant of a square integer matrix.

    ``band``: optional bandwidth hint (entries with |i - j| > band are zero);
    enables the banded lane, which updates only the reachable window.
    """
    m = len(rows)
    if m == 0:
        return 1
    a = [[_wrap(x) for x in row] for row in rows]
    if band is not None and 0 < band < m - 1:
        return int(_banded_det(a, band))
    return int(_dense_det(a, m))


def _sym_swap(a, x, y):
    a[x], a[y] = a[y], a[x]
    for row in a:
        row[x], row[y] = row[y], row[x]


def hermitian_inertia(rows, *, mul, sub, conj, sign, is_zero, divider, zero,
                      band=None):
    """Exact inertia (pos, neg, null) of a Hermitian matrix.

    Element type is opaque; all arithmetic goes through the callbacks:
    ``mul``/``sub`` exact ring operations, ``conj`` conjugation, ``sign`` the
    -1/+1 sign of a real nonzero element, ``is_zero`` the exact zero test,
    ``divider(p)`` a factory returning exact division by the pivot p, and
    ``zero`` the zero element.

    Sign bookkeeping follows Jacobi's rule: with D_0 = 1, a pivot D_k
    contributes +1 when D_k * D_{k-1} > 0 and -1 otherwise.  A zero diagonal
    is cured by symmetric permutation when possible; a fully zero diagonal
    with a nonzero off-diagonal entry takes the 2x2 hyperbolic step (+1, -1)
    followed by a restart on the rescaled Schur complement; a zero block ends
    with the remaining dimensions counted null.  Restarts rescale the
    trailing block by a real factor whose sign equals the running pivot
    sign, so ``flip`` swaps the meaning of later contributions when that
    factor was negative.
    """
    m = len(rows)
    if m == 0:
        return (0, 0, 0)
    pos = neg = null = 0
    a = [list(r) for r in rows]
    banded = band is not None and 0 < band < m - 1
    orig = [list(r) for r in rows] if banded else None
    k = 0
    prev = None          # divisor (last pivot); None stands for 1
    prev_sign = 1
    flip = False

    while k < m:
        if banded:
            e = k + band
            if e < m and prev is not None:
                for i in range(k, e + 1):
                    x = orig[i][e]
                    a[i][e] = zero if is_zero(x) else mul(prev, x)
                    if i != e:
                        a[e][i] = conj(a[i][e])
            p = a[k][k]
            if is_zero(p):
                blk = []
                for i in range(k, m):
                    rowi = []
                    for j in range(k, m):
                        if max(i, j) <= e:
                            rowi.append(a[i][j])
                        else:
                            x = orig[i][j]
                            if prev is None or is_zero(x):
                                rowi.append(x)
                            else:
                                rowi.append(mul(prev, x))
                    blk.append(rowi)
                a = blk
                orig = None
                banded = False
                m -= k
                k = 0
                if prev is not None:
                    flip ^= prev_sign < 0
                prev = None
                prev_sign = 1
                continue
            s = sign(p)
            contrib = 1 if s == prev_sign else -1
            if flip:
                contrib = -contrib
            if contrib > 0:
                pos += 1
            else:
                neg += 1
            hi = min(e, m - 1)
            div = divider(prev) if prev is not None else None
            for i in range(k + 1, hi + 1):
                for j in range(i, hi + 1):
                    t = sub(mul(p, a[i][j]), mul(a[i][k], a[k][j]))
                    a[i][j] = div(t) if div is not None else t
            for i in range(k + 1, hi + 1):
                for j in range(i + 1, hi + 1):
                    a[j][i] = conj(a[i][j])
            prev, prev_sign = p, s
            k += 1
            continue

        pividx = -1
        for i in range(k, m):
            if not is_zero(a[i][i]):
                pividx = i
                break
        if pividx >= 0:
            if pividx != k:
                _sym_swap(a, k, pividx)
            p = a[k][k]
            s = sign(p)
            contrib = 1 if s == prev_sign else -1
            if flip:
                contrib = -contrib
            if contrib > 0:
                pos += 1
            else:
                neg += 1
            div = divider(prev) if prev is not None else None
            for i in range(k + 1, m):
                for j in range(i, m):
                    t = sub(mul(p, a[i][j]), mul(a[i][k], a[k][j]))
                    a[i][j] = div(t) if div is not None else t
            for i in range(k + 1, m):
                for j in range(i + 1, m):
                    a[j][i] = conj(a[i][j])
            prev, prev_sign = p, s
            k += 1
            continue

        # Diagonal of the trailing block is entirely zero.
        hit = None
        for i in range(k, m):
            for j in range(i + 1, m):
                if not is_zero(a[i][j]):
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            null += m - k
            break
        i0, j0 = hit
        if i0 != k:
            _sym_swap(a, k, i0)
        if j0 != k + 1:
            _sym_swap(a, k + 1, j0)
        pos += 1
        neg += 1
        b = a[k][k + 1]
        bc = a[k + 1][k]
        bb = mul(b, bc)
        div = divider(prev) if prev is not None else None
        blk = []
        for r in range(k + 2, m):
            rowr = []
            for c in range(k + 2, m):
                t = sub(sub(mul(bb, a[r][c]),
                            mul(mul(b, a[r][k]), a[k + 1][c])),
                        mul(mul(bc, a[r][k + 1]), a[k][c]))
                if div is not None:
                    t = div(div(t))
                rowr.append(t)
            blk.append(rowr)
        flip ^= prev_sign < 0
        a = blk
        m -= k + 2
        k = 0
        prev = None
        prev_sign = 1

    return (pos, neg, null)

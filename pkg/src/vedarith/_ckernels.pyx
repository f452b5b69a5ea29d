# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit-array kernels.

Function-for-function twin of `_pykernels`: same canonical little-endian
digit lists in and out, same digit-serial algorithms, bit-identical
results.  Digits fit comfortably in 64-bit words (base <= 256), so every
column accumulator and carry stays well inside u64 range.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

ctypedef unsigned long long u64

NAME = "compiled"


cdef u64* _alloc(Py_ssize_t n) except NULL:
    cdef u64* p = <u64*> malloc((n if n > 0 else 1) * sizeof(u64))
    if p == NULL:
        raise MemoryError()
    return p


cdef u64* _from_list(list digits) except NULL:
    cdef Py_ssize_t i, n = len(digits)
    cdef u64* p = _alloc(n)
    for i in range(n):
        p[i] = digits[i]
    return p


cdef list _to_list(u64* a, Py_ssize_t n):
    cdef Py_ssize_t i
    cdef list out = []
    for i in range(n):
        out.append(a[i])
    return out


cdef inline Py_ssize_t _trim(u64* a, Py_ssize_t n):
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return n


cdef int _cmp(u64* a, Py_ssize_t la, u64* b, Py_ssize_t lb):
    cdef Py_ssize_t i
    if la != lb:
        return -1 if la < lb else 1
    for i in range(la - 1, -1, -1):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef Py_ssize_t _sub_inplace(u64* a, Py_ssize_t la, u64* b, Py_ssize_t lb, u64 base):
    # a -= b; requires a >= b
    cdef u64 borrow = 0, bi
    cdef Py_ssize_t i
    for i in range(la):
        bi = (b[i] if i < lb else 0) + borrow
        if a[i] >= bi:
            a[i] = a[i] - bi
            borrow = 0
        else:
            a[i] = a[i] + base - bi
            borrow = 1
    return _trim(a, la)


cdef Py_ssize_t _rsub_into(u64* r, Py_ssize_t lr, u64* y, Py_ssize_t ly, u64 base):
    # r = y - r; requires y >= r; r must have room for ly digits
    cdef u64 borrow = 0, ri
    cdef Py_ssize_t i
    for i in range(ly):
        ri = (r[i] if i < lr else 0) + borrow
        if y[i] >= ri:
            r[i] = y[i] - ri
            borrow = 0
        else:
            r[i] = y[i] + base - ri
            borrow = 1
    return _trim(r, ly)


cdef Py_ssize_t _scale_into(u64* src, Py_ssize_t n, u64 factor, u64 base, u64* dst):
    # dst = src * factor (single digit); dst needs n + 1 slots
    cdef u64 carry = 0, t
    cdef Py_ssize_t i, ln
    if factor == 0 or n == 0:
        return 0
    for i in range(n):
        t = src[i] * factor + carry
        dst[i] = t % base
        carry = t / base
    ln = n
    while carry:
        dst[ln] = carry % base
        carry = carry / base
        ln += 1
    return _trim(dst, ln)


def mul_vedic(list xs, list ys, u64 base):
    """Cross-product multiplication: column sums for every digit diagonal,
    then a single left-to-right carry-resolution sweep."""
    cdef Py_ssize_t m = len(xs), n = len(ys)
    if m == 0 or n == 0:
        return []
    cdef Py_ssize_t ncols = m + n - 1
    cdef u64* x = _from_list(xs)
    cdef u64* y = _from_list(ys)
    cdef u64* cols = _alloc(ncols)
    cdef u64* out = _alloc(m + n)
    cdef Py_ssize_t i, j, c, olen
    cdef u64 xi, carry, t
    try:
        memset(cols, 0, ncols * sizeof(u64))
        for i in range(m):
            xi = x[i]
            if xi == 0:
                continue
            for j in range(n):
                cols[i + j] += xi * y[j]
        carry = 0
        for c in range(ncols):
            t = cols[c] + carry
            out[c] = t % base
            carry = t / base
        olen = ncols
        while carry:
            out[olen] = carry % base
            carry = carry / base
            olen += 1
        return _to_list(out, _trim(out, olen))
    finally:
        free(x)
        free(y)
        free(cols)
        free(out)


def mul_shift_add(list xs, list ys, u64 base):
    """Row-wise schoolbook multiplication: one shifted digit-scaled addend
    per multiplier digit, accumulated as it goes."""
    cdef Py_ssize_t m = len(xs), n = len(ys)
    if m == 0 or n == 0:
        return []
    cdef u64* x = _from_list(xs)
    cdef u64* y = _from_list(ys)
    cdef u64* res = _alloc(m + n)
    cdef Py_ssize_t i, j, k
    cdef u64 d, carry, t
    try:
        memset(res, 0, (m + n) * sizeof(u64))
        for j in range(n):
            d = y[j]
            if d == 0:
                continue
            carry = 0
            for i in range(m):
                t = res[i + j] + x[i] * d + carry
                res[i + j] = t % base
                carry = t / base
            k = j + m
            while carry:
                t = res[k] + carry
                res[k] = t % base
                carry = t / base
                k += 1
        return _to_list(res, _trim(res, m + n))
    finally:
        free(x)
        free(y)
        free(res)


def div_straight(list xs, list ys, u64 base, bint want_trace=False):
    """Straight (at-sight) division; see the pure twin for the full story.
    Returns (quotient, remainder, max_adjust, trace-or-None)."""
    cdef Py_ssize_t M = len(ys)
    if M == 0:
        raise ZeroDivisionError("division by zero")
    trace = [] if want_trace else None
    cdef u64 half = (base + 1) / 2
    cdef u64* y0 = _from_list(ys)
    cdef u64* x0 = _from_list(xs)
    cdef Py_ssize_t L0 = len(xs)
    cdef u64 scale = 1 if y0[M - 1] >= half else base / (y0[M - 1] + 1)
    cdef u64* dx = _alloc(L0 + 1)
    cdef u64* dy = _alloc(M + 1)
    cdef u64* W = _alloc(M + 2)
    cdef u64* SUB = _alloc(M + 2)
    cdef u64* Q = NULL
    cdef Py_ssize_t L, dylen, wlen, slen, qlen, t, i, step, start
    cdef u64 main, K, qhat, q_est, carry, cur
    cdef int adj, max_adjust
    try:
        if scale == 1:
            for i in range(L0):
                dx[i] = x0[i]
            L = L0
            for i in range(M):
                dy[i] = y0[i]
            dylen = M
        else:
            L = _scale_into(x0, L0, scale, base, dx)
            dylen = _scale_into(y0, M, scale, base, dy)
        if dylen != M:
            raise AssertionError("normalization must not grow the divisor")
        if L < M:
            return [], list(xs), 0, trace
        main = dy[M - 1]
        Q = _alloc(L - M + 1)
        wlen = 0
        qlen = 0
        max_adjust = 0
        step = 0
        for t in range(L):
            for i in range(wlen, 0, -1):
                W[i] = W[i - 1]
            W[0] = dx[L - 1 - t]
            wlen = _trim(W, wlen + 1)
            if t < M - 1:
                continue
            step += 1
            K = (W[M - 1] if wlen > M - 1 else 0) + base * (W[M] if wlen > M else 0)
            qhat = K / main
            if qhat > base - 1:
                qhat = base - 1
            q_est = qhat
            slen = _scale_into(dy, M, qhat, base, SUB)
            adj = 0
            while _cmp(W, wlen, SUB, slen) < 0:
                qhat -= 1
                slen = _sub_inplace(SUB, slen, dy, M, base)
                adj += 1
            wlen = _sub_inplace(W, wlen, SUB, slen, base)
            Q[qlen] = qhat
            qlen += 1
            if adj > max_adjust:
                max_adjust = adj
            if want_trace:
                trace.append((step, K, q_est, adj, qhat, K - main * qhat))
        if scale != 1:
            carry = 0
            for i in range(wlen - 1, -1, -1):
                cur = carry * base + W[i]
                W[i] = cur / scale
                carry = cur % scale
            if carry != 0:
                raise AssertionError("scaled remainder must divide exactly")
            wlen = _trim(W, wlen)
        # quotient was collected most-significant first; skip leading zeros
        start = 0
        while start < qlen and Q[start] == 0:
            start += 1
        quotient = []
        for i in range(qlen - 1, start - 1, -1):
            quotient.append(Q[i])
        return quotient, _to_list(W, wlen), max_adjust, trace
    finally:
        free(x0)
        free(y0)
        free(dx)
        free(dy)
        free(W)
        free(SUB)
        if Q != NULL:
            free(Q)


def div_restoring(list x_bits, list y_bits):
    """Bit-serial restoring division.
    Returns (quotient_bits, remainder_bits, subtract_attempts)."""
    cdef Py_ssize_t ny = len(y_bits)
    if ny == 0:
        raise ZeroDivisionError("division by zero")
    cdef Py_ssize_t n = len(x_bits)
    cdef u64* x = _from_list(x_bits)
    cdef u64* y = _from_list(y_bits)
    cdef u64* R = _alloc(ny + 2)
    cdef u64* Q = _alloc(n)
    cdef Py_ssize_t i, j, rlen = 0
    cdef long attempts = 0
    try:
        memset(Q, 0, (n if n > 0 else 1) * sizeof(u64))
        for i in range(n - 1, -1, -1):
            for j in range(rlen, 0, -1):
                R[j] = R[j - 1]
            R[0] = x[i]
            rlen = _trim(R, rlen + 1)
            attempts += 1
            if _cmp(R, rlen, y, ny) >= 0:
                rlen = _sub_inplace(R, rlen, y, ny, 2)
                Q[i] = 1
        return _to_list(Q, _trim(Q, n)), _to_list(R, rlen), attempts
    finally:
        free(x)
        free(y)
        free(R)
        free(Q)


def div_nonrestoring(list x_bits, list y_bits):
    """Bit-serial non-restoring division.
    Returns (quotient_bits, remainder_bits, addsub_steps)."""
    cdef Py_ssize_t ny = len(y_bits)
    if ny == 0:
        raise ZeroDivisionError("division by zero")
    cdef Py_ssize_t n = len(x_bits)
    cdef u64* x = _from_list(x_bits)
    cdef u64* y = _from_list(y_bits)
    cdef u64* R = _alloc(ny + 2)
    cdef u64* Q = _alloc(n)
    cdef u64 one = 1
    cdef Py_ssize_t i, j, rlen = 0
    cdef bint neg = False
    try:
        memset(Q, 0, (n if n > 0 else 1) * sizeof(u64))
        for i in range(n - 1, -1, -1):
            if not neg:
                for j in range(rlen, 0, -1):
                    R[j] = R[j - 1]
                R[0] = x[i]
                rlen = _trim(R, rlen + 1)
                if _cmp(R, rlen, y, ny) >= 0:
                    rlen = _sub_inplace(R, rlen, y, ny, 2)
                else:
                    rlen = _rsub_into(R, rlen, y, ny, 2)
                    neg = True
            else:
                for j in range(rlen, 0, -1):
                    R[j] = R[j - 1]
                R[0] = 0
                rlen = _trim(R, rlen + 1)
                if x[i]:
                    rlen = _sub_inplace(R, rlen, &one, 1, 2)
                if _cmp(R, rlen, y, ny) <= 0:
                    rlen = _rsub_into(R, rlen, y, ny, 2)
                    neg = False
                else:
                    rlen = _sub_inplace(R, rlen, y, ny, 2)
            Q[i] = 0 if neg else 1
        if neg:
            rlen = _rsub_into(R, rlen, y, ny, 2)
        return _to_list(Q, _trim(Q, n)), _to_list(R, rlen), n
    finally:
        free(x)
        free(y)
        free(R)
        free(Q)

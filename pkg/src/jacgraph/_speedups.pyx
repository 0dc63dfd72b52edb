# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-scan kernel; twin of jacgraph._kernel_py.

Same interface and algorithms, C integer arithmetic.  Callers must keep
operands inside the signed 64-bit fast range (the dispatcher in
jacgraph._kernel checks operand bounds before picking this module).
"""

from libc.stdlib cimport free, malloc

MODE_SEMISTABLE = 0
MODE_QUASISTABLE = 1
MODE_STABLE = 2


cdef class Tables:
    cdef public int n
    cdef public long long scale
    cdef long long *floor_rhs
    cdef long long *ceil_rhs

    def __cinit__(self, int n, long long scale):
        cdef size_t size = (<size_t> 1) << n
        self.n = n
        self.scale = scale
        self.floor_rhs = <long long *> malloc(size * sizeof(long long))
        self.ceil_rhs = <long long *> malloc(size * sizeof(long long))
        if self.floor_rhs == NULL or self.ceil_rhs == NULL:
            raise MemoryError()

    def __dealloc__(self):
        if self.floor_rhs != NULL:
            free(self.floor_rhs)
        if self.ceil_rhs != NULL:
            free(self.ceil_rhs)

    # mirrors the NamedTuple interface of the pure kernel (for tests)
    def floor_bounds(self):
        cdef size_t size = (<size_t> 1) << self.n
        return [self.floor_rhs[m] for m in range(size)]

    def ceil_bounds(self):
        cdef size_t size = (<size_t> 1) << self.n
        return [self.ceil_rhs[m] for m in range(size)]


def build_tables(int n, edges, s_flags, scaled_q, long long scale):
    cdef size_t size = (<size_t> 1) << n
    cdef Tables t = Tables(n, scale)
    cdef long long half = scale // 2
    cdef long long *qsum = <long long *> malloc(size * sizeof(long long))
    cdef long long *cross = <long long *> malloc(size * sizeof(long long))
    cdef long long *cross_s = <long long *> malloc(size * sizeof(long long))
    cdef long long *inside_s = <long long *> malloc(size * sizeof(long long))
    cdef long long *cq = <long long *> malloc((n if n else 1) * sizeof(long long))
    if (qsum == NULL or cross == NULL or cross_s == NULL or
            inside_s == NULL or cq == NULL):
        free(qsum); free(cross); free(cross_s); free(inside_s); free(cq)
        raise MemoryError()
    cdef size_t m, lsb
    cdef int a, b, flag, i
    cdef size_t abit, bbit
    try:
        for i in range(n):
            cq[i] = scaled_q[i]
        qsum[0] = 0
        cross[0] = cross_s[0] = inside_s[0] = 0
        for m in range(1, size):
            lsb = m & (~m + 1)
            qsum[m] = qsum[m ^ lsb] + cq[_bit_index(lsb)]
            cross[m] = 0
            cross_s[m] = 0
            inside_s[m] = 0
        for (a, b), flag in zip(edges, s_flags):
            abit = (<size_t> 1) << a
            bbit = (<size_t> 1) << b
            if a == b:
                if flag:
                    for m in range(size):
                        if m & abit:
                            inside_s[m] += 1
                continue
            for m in range(size):
                if ((m & abit) != 0) != ((m & bbit) != 0):
                    cross[m] += 1
                    if flag:
                        cross_s[m] += 1
                elif flag and (m & abit):
                    inside_s[m] += 1
        for m in range(size):
            t.floor_rhs[m] = qsum[m] - half * cross[m] - scale * inside_s[m]
            t.ceil_rhs[m] = qsum[m] + half * cross[m] - scale * (cross_s[m] + inside_s[m])
    finally:
        free(qsum); free(cross); free(cross_s); free(inside_s); free(cq)
    return t


cdef inline int _bit_index(size_t bit):
    cdef int i = 0
    while bit > 1:
        bit >>= 1
        i += 1
    return i


cdef int _place(
    int k,
    int n,
    long long partial,
    long long total,
    long long scale,
    long long *lo,
    long long *hi,
    long long *low,
    long long *high,
    long long *suf_lo,
    long long *suf_hi,
    long long *sums,
    long long *d,
    list out,
) except -1:
    cdef size_t base = (<size_t> 1) << k
    cdef size_t full = ((<size_t> 1) << n) - 1
    cdef size_t m
    cdef long long dv, s, sd, p2
    cdef int ok
    if k == n - 1:
        dv = total - partial
        if dv < lo[k] or dv > hi[k]:
            return 0
        for m in range(base, full):
            sd = scale * (sums[m ^ base] + dv)
            if sd < low[m] or sd > high[m]:
                return 0
        d[k] = dv
        out.append(tuple([d[i] for i in range(n)]))
        return 0
    for dv in range(lo[k], hi[k] + 1):
        p2 = partial + dv
        if p2 + suf_lo[k + 1] > total or p2 + suf_hi[k + 1] < total:
            continue
        ok = 1
        for m in range(base, base << 1):
            s = sums[m ^ base] + dv
            sums[m] = s
            sd = scale * s
            if sd < low[m] or sd > high[m]:
                ok = 0
                break
        if ok:
            d[k] = dv
            _place(k + 1, n, p2, total, scale, lo, hi, low, high,
                   suf_lo, suf_hi, sums, d, out)
    return 0


def box_enumerate(Tables tables, int v0, total, lo, hi, int mode):
    cdef int n = tables.n
    cdef long long scale = tables.scale
    cdef size_t size = (<size_t> 1) << n
    cdef size_t full = size - 1
    cdef size_t m, vbit
    cdef int k
    cdef long long ctotal = total

    cdef long long *low = <long long *> malloc(size * sizeof(long long))
    cdef long long *high = <long long *> malloc(size * sizeof(long long))
    cdef long long *sums = <long long *> malloc(size * sizeof(long long))
    cdef long long *clo = <long long *> malloc(n * sizeof(long long))
    cdef long long *chi = <long long *> malloc(n * sizeof(long long))
    cdef long long *suf_lo = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *suf_hi = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *d = <long long *> malloc(n * sizeof(long long))
    if (low == NULL or high == NULL or sums == NULL or clo == NULL or
            chi == NULL or suf_lo == NULL or suf_hi == NULL or d == NULL):
        free(low); free(high); free(sums); free(clo); free(chi)
        free(suf_lo); free(suf_hi); free(d)
        raise MemoryError()

    out = []
    try:
        for m in range(size):
            low[m] = tables.floor_rhs[m]
            high[m] = tables.ceil_rhs[m]
        if mode == 1:
            vbit = (<size_t> 1) << v0
            for m in range(1, full):
                if m & vbit:
                    low[m] += 1
                else:
                    high[m] -= 1
        elif mode == 2:
            for m in range(1, full):
                low[m] += 1
                high[m] -= 1
        for k in range(n):
            clo[k] = lo[k]
            chi[k] = hi[k]
        suf_lo[n] = 0
        suf_hi[n] = 0
        for k in range(n - 1, -1, -1):
            suf_lo[k] = suf_lo[k + 1] + clo[k]
            suf_hi[k] = suf_hi[k + 1] + chi[k]
        if suf_lo[0] > ctotal or suf_hi[0] < ctotal:
            return out
        sums[0] = 0
        _place(0, n, 0, ctotal, scale, clo, chi, low, high,
               suf_lo, suf_hi, sums, d, out)
    finally:
        free(low); free(high); free(sums); free(clo); free(chi)
        free(suf_lo); free(suf_hi); free(d)
    return out


def defect_scan(Tables tables, d, int v0):
    cdef int n = tables.n
    cdef long long scale = tables.scale
    cdef size_t size = (<size_t> 1) << n
    cdef size_t m, lsb, vbit
    cdef long long s, e, best
    cdef size_t and_acc, or_acc, bp_and
    cdef long long count
    cdef int i

    cdef long long *sums = <long long *> malloc(size * sizeof(long long))
    cdef long long *cd = <long long *> malloc(n * sizeof(long long))
    if sums == NULL or cd == NULL:
        free(sums); free(cd)
        raise MemoryError()
    try:
        for i in range(n):
            cd[i] = d[i]
        sums[0] = 0
        best = 0
        for m in range(1, size):
            lsb = m & (~m + 1)
            s = sums[m ^ lsb] + cd[_bit_index(lsb)]
            sums[m] = s
            e = tables.floor_rhs[m] - scale * s
            if e > best:
                best = e
        and_acc = size - 1
        or_acc = 0
        count = 0
        for m in range(size):
            if tables.floor_rhs[m] - scale * sums[m] == best:
                and_acc &= m
                or_acc |= m
                count += 1
        if best != 0:
            return best, and_acc, or_acc, count, None
        vbit = (<size_t> 1) << v0
        bp_and = size - 1
        for m in range(size):
            if (m & vbit) and tables.floor_rhs[m] - scale * sums[m] == 0:
                bp_and &= m
        return best, and_acc, or_acc, count, bp_and
    finally:
        free(sums); free(cd)

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the hot inner loops (see _kernel_py for the contract)."""

NAME = "cython"

DEF MAXLEN = 256


def expvecs_of_weight(int w, int k):
    cdef int vec[MAXLEN]
    cdef int i
    out = []
    if k > MAXLEN or w > MAXLEN * MAXLEN:
        # fall back for absurd sizes rather than overflow the stack buffer
        from grasscoh import _kernel_py
        return _kernel_py.expvecs_of_weight(w, k)
    if k < 1:
        return [()] if w == 0 else []
    if w < 0:
        return []
    for i in range(k):
        vec[i] = 0
    _ev_rec(w, k, vec, k, out)
    return out


cdef void _ev_rec(int rem, int i, int *vec, int k, list out):
    cdef int a, j
    if i == 1:
        vec[0] = rem
        out.append(tuple([vec[j] for j in range(k)]))
        vec[0] = 0
        return
    for a in range(rem // i, -1, -1):
        vec[i - 1] = a
        _ev_rec(rem - a * i, i - 1, vec, k, out)
    vec[i - 1] = 0


def vertical_strips(tuple parts, int size, int max_rows, int max_part):
    cdef int lam[MAXLEN]
    cdef int mu[MAXLEN]
    cdef int i, nrows
    nrows = len(parts)
    if max_rows > MAXLEN:
        from grasscoh import _kernel_py
        return _kernel_py.vertical_strips(parts, size, max_rows, max_part)
    if nrows > max_rows:
        return []
    if nrows > 0 and parts[0] > max_part:
        return []
    for i in range(nrows):
        lam[i] = parts[i]
    for i in range(nrows, max_rows):
        lam[i] = 0
    out = []
    _vs_rec(0, size, max_part, lam, mu, max_rows, out)
    return out


cdef void _vs_rec(int row, int left, int prev, int *lam, int *mu,
                  int max_rows, list out):
    cdef int up, j, last
    if left == 0:
        last = row
        for j in range(row, max_rows):
            mu[j] = lam[j]
        last = max_rows
        while last > 0 and mu[last - 1] == 0:
            last -= 1
        out.append(tuple([mu[j] for j in range(last)]))
        return
    if row == max_rows or left > max_rows - row:
        return
    up = lam[row] + 1
    if up <= prev:
        mu[row] = up
        _vs_rec(row + 1, left - 1, up, lam, mu, max_rows, out)
    mu[row] = lam[row]
    _vs_rec(row + 1, left, lam[row], lam, mu, max_rows, out)

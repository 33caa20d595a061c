# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; same search as ``_pykernel.backtrack``.

Bitsets are arrays of ``uint64`` words, ``W = ceil(n / 64)`` per vertex.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef enum:
    WORD = 64

cdef inline void to_words(object mask, uint64_t* out, int W):
    cdef int k
    m = mask
    for k in range(W):
        out[k] = <uint64_t>(m & 0xFFFFFFFFFFFFFFFF)
        m >>= 64


cdef inline int lowest(uint64_t* mask, int W) nogil:
    cdef int k
    for k in range(W):
        if mask[k]:
            return k * WORD + __builtin_ctzll(mask[k])
    return -1


def backtrack(int n, list nbr1, list adj2, list allowed, list order, list prev1,
              list prev2, long long budget=0):
    if n == 0:
        return 1, [], 0
    cdef int W = (n + WORD - 1) // WORD
    cdef uint64_t* a2 = <uint64_t*>malloc(n * W * sizeof(uint64_t))
    cdef uint64_t* cand = <uint64_t*>malloc(n * W * sizeof(uint64_t))
    cdef uint64_t* rem = <uint64_t*>malloc(n * W * sizeof(uint64_t))
    cdef uint64_t* used = <uint64_t*>malloc(W * sizeof(uint64_t))
    cdef int* ordr = <int*>malloc(n * sizeof(int))
    cdef int* pos = <int*>malloc(n * sizeof(int))
    cdef int* p1 = <int*>malloc(n * sizeof(int))
    cdef int* p2 = <int*>malloc(n * sizeof(int))
    cdef int* image = <int*>malloc(n * sizeof(int))
    cdef int* marks = <int*>malloc(n * sizeof(int))
    cdef int* loff = <int*>malloc((n + 1) * sizeof(int))
    cdef int* lnbr
    cdef int* trail_v
    cdef uint64_t* trail_w
    cdef int i, k, u, v, w, q, d, e, t, total, top, mark, ok, pw, pk
    cdef long long nodes = 0
    cdef uint64_t low

    try:
        for i in range(n):
            to_words(adj2[i], a2 + i * W, W)
            to_words(allowed[i], cand + i * W, W)
            ordr[i] = order[i]
            p1[i] = prev1[i]
            p2[i] = prev2[i]
            image[i] = -1
        for i in range(n):
            pos[ordr[i]] = i
        memset(used, 0, W * sizeof(uint64_t))

        # later-assigned white neighbours, CSR
        total = 0
        loff[0] = 0
        lists = []
        for u in range(n):
            lst = [x for x in nbr1[u] if pos[x] > pos[u]]
            lists.append(lst)
            total += len(lst)
            loff[u + 1] = total
        lnbr = <int*>malloc((total + 1) * sizeof(int))
        trail_v = <int*>malloc((total + 1) * sizeof(int))
        trail_w = <uint64_t*>malloc((total + 1) * W * sizeof(uint64_t))
        try:
            for u in range(n):
                for k, x in enumerate(lists[u]):
                    lnbr[loff[u] + k] = x
            top = 0
            d = 0
            # domain of depth 0
            u = ordr[0]
            for k in range(W):
                rem[k] = cand[u * W + k] & ~used[k]
            while True:
                w = lowest(rem + d * W, W)
                if w < 0:
                    d -= 1
                    if d < 0:
                        return 0, None, nodes
                    u = ordr[d]
                    used[image[u] // WORD] &= ~((<uint64_t>1) << (image[u] % WORD))
                    image[u] = -1
                    mark = marks[d]
                    while top > mark:
                        top -= 1
                        memcpy(cand + trail_v[top] * W, trail_w + top * W, W * sizeof(uint64_t))
                    continue
                rem[d * W + w // WORD] &= ~((<uint64_t>1) << (w % WORD))
                q = p2[w]
                if q >= 0 and not (used[q // WORD] >> (q % WORD)) & 1:
                    continue
                nodes += 1
                if budget and nodes > budget:
                    return -1, None, nodes - 1
                u = ordr[d]
                image[u] = w
                low = (<uint64_t>1) << (w % WORD)
                used[w // WORD] |= low
                marks[d] = top
                for e in range(loff[u], loff[u + 1]):
                    v = lnbr[e]
                    trail_v[top] = v
                    memcpy(trail_w + top * W, cand + v * W, W * sizeof(uint64_t))
                    top += 1
                    for k in range(W):
                        cand[v * W + k] &= ~a2[w * W + k]
                ok = 1
                for i in range(d + 1, n):
                    v = ordr[i]
                    t = 0
                    for k in range(W):
                        if cand[v * W + k] & ~used[k]:
                            t = 1
                            break
                    if not t:
                        ok = 0
                        break
                if not ok:
                    used[w // WORD] &= ~low
                    image[u] = -1
                    while top > marks[d]:
                        top -= 1
                        memcpy(cand + trail_v[top] * W, trail_w + top * W, W * sizeof(uint64_t))
                    continue
                d += 1
                if d == n:
                    return 1, [image[i] for i in range(n)], nodes
                u = ordr[d]
                for k in range(W):
                    rem[d * W + k] = cand[u * W + k] & ~used[k]
                q = p1[u]
                if q >= 0:
                    # keep only images above the twin's image
                    pw = image[q] // WORD
                    pk = image[q] % WORD
                    for k in range(pw):
                        rem[d * W + k] = 0
                    if pk == WORD - 1:
                        rem[d * W + pw] = 0
                    else:
                        rem[d * W + pw] &= ~(((<uint64_t>1) << (pk + 1)) - 1)
        finally:
            free(lnbr)
            free(trail_v)
            free(trail_w)
    finally:
        free(a2)
        free(cand)
        free(rem)
        free(used)
        free(ordr)
        free(pos)
        free(p1)
        free(p2)
        free(image)
        free(marks)
        free(loff)

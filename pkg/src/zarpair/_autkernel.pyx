# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backtracking search for incidence-preserving line maps.

Twin of _autkernel_py: same pruning, same visit order, same results.
Points are uint64 bitmasks, so this kernel handles up to 64 lines; the
dispatcher falls back to the pure-Python kernel beyond that.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport uint64_t


cdef struct SearchState:
    int n              # lines
    int m              # points
    int find_all
    int* img           # line -> image or -1
    int* used          # image taken flags
    int* order         # processing order of lines
    int* cand          # flattened candidate lists
    int* cand_off      # offsets into cand per line
    int* pair_src      # n*n point sizes through source pairs
    int* pair_dst
    int* through       # flattened point indices through each line
    int* through_off
    int* point_size
    int* cnt           # assigned lines per point
    uint64_t* acc      # partial image masks per point
    uint64_t* dst_masks  # sorted target masks


cdef int _mask_found(uint64_t* arr, int size, uint64_t key) nogil:
    cdef int lo = 0, hi = size - 1, mid
    while lo <= hi:
        mid = (lo + hi) // 2
        if arr[mid] == key:
            return 1
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid - 1
    return 0


cdef int _dfs(SearchState* st, int depth, list results):
    """Returns 1 to stop the search (first hit found and find_all unset)."""
    cdef int i, j, c, d, i2, t, p, ok, touched, stop
    cdef uint64_t bit
    if depth == st.n:
        results.append(tuple([st.img[p] for p in range(st.n)]))
        return 0 if st.find_all else 1
    i = st.order[depth]
    for c in range(st.cand_off[i], st.cand_off[i + 1]):
        j = st.cand[c]
        if st.used[j]:
            continue
        ok = 1
        for d in range(depth):
            i2 = st.order[d]
            if st.pair_src[i * st.n + i2] != st.pair_dst[j * st.n + st.img[i2]]:
                ok = 0
                break
        touched = 0
        if ok:
            bit = (<uint64_t>1) << j
            for t in range(st.through_off[i], st.through_off[i + 1]):
                p = st.through[t]
                st.acc[p] |= bit
                st.cnt[p] += 1
                touched += 1
                if st.cnt[p] == st.point_size[p] and not _mask_found(
                    st.dst_masks, st.m, st.acc[p]
                ):
                    ok = 0
                    break
        stop = 0
        if ok:
            st.img[i] = j
            st.used[j] = 1
            stop = _dfs(st, depth + 1, results)
            st.used[j] = 0
            st.img[i] = -1
        bit = ~((<uint64_t>1) << j)
        for t in range(st.through_off[i], st.through_off[i] + touched):
            p = st.through[t]
            st.acc[p] &= bit
            st.cnt[p] -= 1
        if stop:
            return 1
    return 0


def search_line_maps(int n, src_points, dst_points, bint find_all=True):
    """Permutations of 0..n-1 carrying every src point onto a dst point."""
    cdef int m = len(src_points)
    cdef int i, j, t, a, b, idx
    cdef int total_cand, total_through
    cdef uint64_t mask
    cdef SearchState st
    cdef list results = []
    if len(dst_points) != m:
        return []
    if sorted(map(len, src_points)) != sorted(map(len, dst_points)):
        return []
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 lines")

    sigs_src = [[] for _ in range(n)]
    sigs_dst = [[] for _ in range(n)]
    for p in src_points:
        for a in p:
            sigs_src[a].append(len(p))
    for p in dst_points:
        for a in p:
            sigs_dst[a].append(len(p))
    sig_src = [tuple(sorted(s)) for s in sigs_src]
    sig_dst = [tuple(sorted(s)) for s in sigs_dst]
    cand_lists = [
        [j for j in range(n) if sig_dst[j] == sig_src[i]] for i in range(n)
    ]
    for c in cand_lists:
        if len(c) == 0:
            return []
    order_list = sorted(range(n), key=lambda i: (len(cand_lists[i]), i))

    total_cand = 0
    for c in cand_lists:
        total_cand += len(c)
    total_through = 0
    for p in src_points:
        total_through += len(p)

    st.n = n
    st.m = m
    st.find_all = 1 if find_all else 0
    st.img = <int*>malloc(max(n, 1) * sizeof(int))
    st.used = <int*>malloc(max(n, 1) * sizeof(int))
    st.order = <int*>malloc(max(n, 1) * sizeof(int))
    st.cand = <int*>malloc(max(total_cand, 1) * sizeof(int))
    st.cand_off = <int*>malloc((n + 1) * sizeof(int))
    st.pair_src = <int*>malloc(max(n * n, 1) * sizeof(int))
    st.pair_dst = <int*>malloc(max(n * n, 1) * sizeof(int))
    st.through = <int*>malloc(max(total_through, 1) * sizeof(int))
    st.through_off = <int*>malloc((n + 1) * sizeof(int))
    st.point_size = <int*>malloc(max(m, 1) * sizeof(int))
    st.cnt = <int*>malloc(max(m, 1) * sizeof(int))
    st.acc = <uint64_t*>malloc(max(m, 1) * sizeof(uint64_t))
    st.dst_masks = <uint64_t*>malloc(max(m, 1) * sizeof(uint64_t))

    try:
        for i in range(n):
            st.img[i] = -1
            st.used[i] = 0
            st.order[i] = order_list[i]
        idx = 0
        for i in range(n):
            st.cand_off[i] = idx
            for j in cand_lists[i]:
                st.cand[idx] = j
                idx += 1
        st.cand_off[n] = idx

        for i in range(n * n):
            st.pair_src[i] = 0
            st.pair_dst[i] = 0
        for p in src_points:
            for a in p:
                for b in p:
                    if a != b:
                        st.pair_src[a * n + b] = len(p)
        for p in dst_points:
            for a in p:
                for b in p:
                    if a != b:
                        st.pair_dst[a * n + b] = len(p)

        through_lists = [[] for _ in range(n)]
        for t, p in enumerate(src_points):
            st.point_size[t] = len(p)
            st.cnt[t] = 0
            st.acc[t] = 0
            for a in p:
                through_lists[a].append(t)
        idx = 0
        for i in range(n):
            st.through_off[i] = idx
            for t in through_lists[i]:
                st.through[idx] = t
                idx += 1
        st.through_off[n] = idx

        masks = []
        for p in dst_points:
            mask = 0
            for a in p:
                mask |= (<uint64_t>1) << a
            masks.append(mask)
        masks.sort()
        for t in range(m):
            st.dst_masks[t] = masks[t]

        _dfs(&st, 0, results)
        results.sort()
        return results
    finally:
        free(st.img)
        free(st.used)
        free(st.order)
        free(st.cand)
        free(st.cand_off)
        free(st.pair_src)
        free(st.pair_dst)
        free(st.through)
        free(st.through_off)
        free(st.point_size)
        free(st.cnt)
        free(st.acc)
        free(st.dst_masks)

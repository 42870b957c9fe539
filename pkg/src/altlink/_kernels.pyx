# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Kauffman-state search.

Same contract and emission order as :mod:`altlink._pykernels`.
"""

from libc.stdlib cimport malloc, calloc, free

IMPLEMENTATION = "cython"


cdef struct Search:
    int m
    int n_regions
    int *n_opts        # per crossing
    int *opt_corner    # m * 4
    int *opt_region
    int *opt_fil2
    int *opt_gr
    int *n_regs        # distinct regions per crossing
    int *regs          # m * 4
    int *avail
    char *used
    int *chosen
    # tally mode
    long long *counts  # (2m+1) x (2m+1), offset m
    int span


cdef int _setup(Search *S, list options, int n_regions) except -1:
    cdef int m = len(options)
    cdef int i, k, j, r, nr, dup
    S.m = m
    S.n_regions = n_regions
    S.n_opts = <int *> calloc(m + 1, sizeof(int))
    S.opt_corner = <int *> calloc(4 * m + 1, sizeof(int))
    S.opt_region = <int *> calloc(4 * m + 1, sizeof(int))
    S.opt_fil2 = <int *> calloc(4 * m + 1, sizeof(int))
    S.opt_gr = <int *> calloc(4 * m + 1, sizeof(int))
    S.n_regs = <int *> calloc(m + 1, sizeof(int))
    S.regs = <int *> calloc(4 * m + 1, sizeof(int))
    S.avail = <int *> calloc(n_regions + 1, sizeof(int))
    S.used = <char *> calloc(n_regions + 1, sizeof(char))
    S.chosen = <int *> calloc(m + 1, sizeof(int))
    S.counts = NULL
    S.span = 2 * m + 1
    if (S.n_opts == NULL or S.opt_corner == NULL or S.opt_region == NULL
            or S.opt_fil2 == NULL or S.opt_gr == NULL or S.n_regs == NULL
            or S.regs == NULL or S.avail == NULL or S.used == NULL
            or S.chosen == NULL):
        raise MemoryError()
    for i in range(m):
        opts = options[i]
        if len(opts) > 4:
            raise ValueError("a crossing has at most four corners")
        S.n_opts[i] = len(opts)
        nr = 0
        for k in range(len(opts)):
            corner, region, df, dg = opts[k]
            if not 0 <= region < n_regions:
                raise ValueError(f"region {region} out of range")
            S.opt_corner[4 * i + k] = corner
            S.opt_region[4 * i + k] = region
            S.opt_fil2[4 * i + k] = df
            S.opt_gr[4 * i + k] = dg
            dup = 0
            for j in range(nr):
                if S.regs[4 * i + j] == region:
                    dup = 1
            if not dup:
                S.regs[4 * i + nr] = region
                nr += 1
        S.n_regs[i] = nr
        for j in range(nr):
            S.avail[S.regs[4 * i + j]] += 1
    return 0


cdef void _teardown(Search *S):
    free(S.n_opts)
    free(S.opt_corner)
    free(S.opt_region)
    free(S.opt_fil2)
    free(S.opt_gr)
    free(S.n_regs)
    free(S.regs)
    free(S.avail)
    free(S.used)
    free(S.chosen)
    if S.counts != NULL:
        free(S.counts)


cdef int _dfs(Search *S, int i, int fil2, int gr, list out) except -1:
    cdef int k, j, r, region, ok, base, nr
    if i == S.m:
        if out is None:
            S.counts[(fil2 + S.m) * S.span + (gr + S.m)] += 1
        else:
            out.append((tuple([S.chosen[j] for j in range(S.m)]), fil2, gr))
        return 0
    base = 4 * i
    nr = S.n_regs[i]
    for j in range(nr):
        S.avail[S.regs[base + j]] -= 1
    for k in range(S.n_opts[i]):
        region = S.opt_region[base + k]
        if S.used[region]:
            continue
        ok = 1
        for j in range(nr):
            r = S.regs[base + j]
            if r != region and not S.used[r] and S.avail[r] == 0:
                ok = 0
                break
        if not ok:
            continue
        S.used[region] = 1
        S.chosen[i] = S.opt_corner[base + k]
        _dfs(S, i + 1, fil2 + S.opt_fil2[base + k], gr + S.opt_gr[base + k], out)
        S.used[region] = 0
    for j in range(nr):
        S.avail[S.regs[base + j]] += 1
    return 0


def enumerate_assignments(list options, int n_regions):
    cdef Search S
    cdef list out = []
    try:
        _setup(&S, options, n_regions)
        _dfs(&S, 0, 0, 0, out)
    finally:
        _teardown(&S)
    return out


def tally_states(list options, int n_regions):
    cdef Search S
    cdef int f, g
    cdef dict counts = {}
    cdef long long v
    try:
        _setup(&S, options, n_regions)
        # local contributions are bounded by one unit per crossing
        S.counts = <long long *> calloc(S.span * S.span, sizeof(long long))
        if S.counts == NULL:
            raise MemoryError()
        _dfs(&S, 0, 0, 0, None)
        for f in range(S.span):
            for g in range(S.span):
                v = S.counts[f * S.span + g]
                if v:
                    counts[f - S.m, g - S.m] = v
    finally:
        _teardown(&S)
    return counts

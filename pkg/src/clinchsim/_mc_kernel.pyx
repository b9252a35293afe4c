# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled replication engine.

Replays the exact draw sequence of the pure-Python engine: xoshiro256**
streams seeded per replication, rejection-sampled bounded draws, and the
same per-race consumption order (pair draws, per-driver coins, one
Fisher-Yates tie-break shuffle).  Scores arrive pre-scaled to integers;
champion choice and the clinch inequalities are invariant under positive
scaling, so integer arithmetic decides identically to the exact rational
path.

The replication loop runs without the GIL, so the orchestrator can run
blocks from a thread pool with real parallelism.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc

cdef uint64_t _GOLDEN = 0x9E3779B97F4A7C15
cdef uint64_t _MIX_A = 0xBF58476D1CE4E5B9
cdef uint64_t _MIX_B = 0x94D049BB133111EB

ENGINE_NAME = "compiled"

ctypedef struct Rng:
    uint64_t s0
    uint64_t s1
    uint64_t s2
    uint64_t s3


cdef inline uint64_t _rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


cdef inline uint64_t _mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * _MIX_A
    z = (z ^ (z >> 27)) * _MIX_B
    return z ^ (z >> 31)


cdef inline void _rng_init(Rng* g, uint64_t seed, uint64_t stream) nogil:
    cdef uint64_t state = seed ^ _mix64(stream)
    state += _GOLDEN
    g.s0 = _mix64(state)
    state += _GOLDEN
    g.s1 = _mix64(state)
    state += _GOLDEN
    g.s2 = _mix64(state)
    state += _GOLDEN
    g.s3 = _mix64(state)
    if g.s0 == 0 and g.s1 == 0 and g.s2 == 0 and g.s3 == 0:
        g.s0 = 1


cdef inline uint64_t _rng_next(Rng* g) nogil:
    cdef uint64_t result = _rotl(g.s1 * 5, 7) * 9
    cdef uint64_t t = g.s1 << 17
    g.s2 ^= g.s0
    g.s3 ^= g.s1
    g.s1 ^= g.s2
    g.s0 ^= g.s3
    g.s2 ^= t
    g.s3 = _rotl(g.s3, 45)
    return result


cdef inline uint64_t _rng_bounded(Rng* g, uint64_t bound) nogil:
    # bound <= 1 consumes nothing, mirroring RngStream.bounded.
    if bound <= 1:
        return 0
    cdef uint64_t threshold = (0 - bound) % bound
    cdef uint64_t r = _rng_next(g)
    while r < threshold:
        r = _rng_next(g)
    return r % bound


cdef inline int _champion(Rng* g, int64_t* points, int32_t* wins, int d_count) nogil:
    """Lexicographic (points, wins) maximum; lot among full ties.

    The lot picks the k-th tied driver in ascending index order, consuming
    one bounded draw only when the tie is real.
    """
    cdef int best = 0
    cdef int d, cnt, idx
    cdef uint64_t k
    for d in range(1, d_count):
        if points[d] > points[best] or (points[d] == points[best] and wins[d] > wins[best]):
            best = d
    cnt = 0
    for d in range(d_count):
        if points[d] == points[best] and wins[d] == wins[best]:
            cnt += 1
    if cnt <= 1:
        return best
    k = _rng_bounded(g, <uint64_t>cnt)
    idx = 0
    for d in range(d_count):
        if points[d] == points[best] and wins[d] == wins[best]:
            if idx == <int>k:
                return d
            idx += 1
    return best


def rng_probe(master_seed, stream, int count):
    """Raw generator words for one stream; used to cross-check engines."""
    cdef Rng g
    _rng_init(&g, <uint64_t>master_seed, <uint64_t>stream)
    out = []
    cdef int i
    for i in range(count):
        out.append(_rng_next(&g))
    return out


def bounded_probe(master_seed, stream, bounds):
    """Bounded draws for one stream; used to cross-check engines."""
    cdef Rng g
    _rng_init(&g, <uint64_t>master_seed, <uint64_t>stream)
    out = []
    for b in bounds:
        out.append(_rng_bounded(&g, <uint64_t>b))
    return out


def run_block(
    master_seed,
    r_lo,
    r_hi,
    int32_t[:, ::1] races,
    int method,
    int n,
    int64_t[:, ::1] scores,
    int64_t[::1] s1,
    int64_t[::1] ref_scores,
    bint risk_averse,
):
    """Accumulate metrics for replications ``r_lo <= r < r_hi``.

    ``races`` holds one row per pool race with 0 for unclassified entries;
    ``scores`` holds one row per rule indexed by place (entry 0 is the
    unclassified score, always 0).  Returns the same per-rule integer
    quadruples as the pure-Python engine.
    """
    cdef uint64_t seed = <uint64_t>master_seed
    cdef uint64_t lo = <uint64_t>r_lo
    cdef uint64_t hi = <uint64_t>r_hi
    cdef int pool = races.shape[0]
    cdef int d_count = races.shape[1]
    cdef int n_rules = scores.shape[0]

    if scores.shape[1] != d_count + 1 or ref_scores.shape[0] != d_count + 1:
        raise ValueError("score tables must have driver_count + 1 columns")
    if n < 1 or pool < 1 or d_count < 1 or n_rules < 1:
        raise ValueError("degenerate block")

    cdef int32_t* season = <int32_t*>malloc(n * d_count * sizeof(int32_t))
    cdef int32_t* spots = <int32_t*>malloc(d_count * sizeof(int32_t))
    cdef int32_t* tb = <int32_t*>malloc(d_count * sizeof(int32_t))
    cdef int32_t* keys = <int32_t*>malloc(d_count * sizeof(int32_t))
    cdef int64_t* points = <int64_t*>malloc(d_count * sizeof(int64_t))
    cdef int32_t* wins = <int32_t*>malloc(d_count * sizeof(int32_t))
    cdef int64_t* rpoints = <int64_t*>malloc(d_count * sizeof(int64_t))
    cdef int32_t* rwins = <int32_t*>malloc(d_count * sizeof(int32_t))
    cdef int64_t* acc = <int64_t*>malloc(n_rules * 4 * sizeof(int64_t))

    if (season == NULL or spots == NULL or tb == NULL or keys == NULL
            or points == NULL or wins == NULL or rpoints == NULL
            or rwins == NULL or acc == NULL):
        free(season); free(spots); free(tb); free(keys); free(points)
        free(wins); free(rpoints); free(rwins); free(acc)
        raise MemoryError()

    cdef Rng g
    cdef uint64_t r
    cdef int m, d, e, ri, base, rank, sk
    cdef int i, j, t, champ, r2, clinch, u, rem
    cdef int64_t p, lead, bp, s1v
    cdef int bw
    cdef bint won, still_open

    for ri in range(n_rules * 4):
        acc[ri] = 0

    with nogil:
        for r in range(lo, hi):
            _rng_init(&g, seed, r)

            # Season generation.
            if method == 1:
                for m in range(n):
                    i = <int>_rng_bounded(&g, <uint64_t>pool)
                    base = m * d_count
                    for d in range(d_count):
                        season[base + d] = races[i, d]
            else:
                for m in range(n):
                    if pool > 1:
                        i = <int>_rng_bounded(&g, <uint64_t>pool)
                        j = <int>_rng_bounded(&g, <uint64_t>(pool - 1))
                        if j >= i:
                            j += 1
                    else:
                        i = 0
                        j = 0
                    for d in range(d_count):
                        if _rng_bounded(&g, 2) == 0:
                            spots[d] = races[i, d]
                        else:
                            spots[d] = races[j, d]
                    for d in range(d_count):
                        tb[d] = d
                    for t in range(d_count - 1, 0, -1):
                        e = <int>_rng_bounded(&g, <uint64_t>(t + 1))
                        sk = tb[t]
                        tb[t] = tb[e]
                        tb[e] = sk
                    for d in range(d_count):
                        sk = spots[d] if spots[d] > 0 else d_count + 1
                        keys[d] = sk * d_count + tb[d]
                    base = m * d_count
                    for d in range(d_count):
                        rank = 1
                        for e in range(d_count):
                            if keys[e] < keys[d]:
                                rank += 1
                        season[base + d] = rank

            # Risk-averse transform: the reference champion's wins become
            # second places.
            if risk_averse:
                for d in range(d_count):
                    points[d] = 0
                    wins[d] = 0
                for m in range(n):
                    base = m * d_count
                    for d in range(d_count):
                        p = season[base + d]
                        points[d] += ref_scores[<int>p]
                        if p == 1:
                            wins[d] += 1
                champ = _champion(&g, points, wins, d_count)
                for m in range(n):
                    base = m * d_count
                    if season[base + champ] == 1:
                        r2 = -1
                        for d in range(d_count):
                            if season[base + d] == 2:
                                r2 = d
                                break
                        if r2 >= 0:
                            season[base + champ] = 2
                            season[base + r2] = 1

            # Evaluate the shared season under every rule in order.
            for ri in range(n_rules):
                for d in range(d_count):
                    points[d] = 0
                    wins[d] = 0
                for m in range(n):
                    base = m * d_count
                    for d in range(d_count):
                        p = season[base + d]
                        points[d] += scores[ri, <int>p]
                        if p == 1:
                            wins[d] += 1
                champ = _champion(&g, points, wins, d_count)
                won = wins[champ] > 0

                if d_count == 1:
                    clinch = 1
                else:
                    for d in range(d_count):
                        rpoints[d] = 0
                        rwins[d] = 0
                    clinch = n
                    s1v = s1[ri]
                    for m in range(1, n + 1):
                        base = (m - 1) * d_count
                        for d in range(d_count):
                            p = season[base + d]
                            rpoints[d] += scores[ri, <int>p]
                            if p == 1:
                                rwins[d] += 1
                        bp = 0
                        bw = -1
                        for d in range(d_count):
                            if d == champ:
                                continue
                            if bw < 0 or rpoints[d] > bp or (rpoints[d] == bp and rwins[d] > bw):
                                bp = rpoints[d]
                                bw = rwins[d]
                        lead = rpoints[champ] - bp
                        rem = n - m
                        still_open = lead < rem * s1v or (
                            lead == rem * s1v and rwins[champ] - bw <= rem
                        )
                        if not still_open:
                            clinch = m
                            break

                u = n - clinch
                acc[ri * 4 + 0] += u
                acc[ri * 4 + 1] += u * u
                if not won:
                    acc[ri * 4 + 2] += 1
                if u >= 3:
                    acc[ri * 4 + 3] += 1

    out = [
        [acc[ri * 4 + 0], acc[ri * 4 + 1], acc[ri * 4 + 2], acc[ri * 4 + 3]]
        for ri in range(n_rules)
    ]
    free(season); free(spots); free(tb); free(keys); free(points)
    free(wins); free(rpoints); free(rwins); free(acc)
    return out

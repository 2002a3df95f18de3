# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cover-search kernel.

Mirror of _cover_py: same ball expansion, same branching order, same node
accounting, so both backends return identical (status, witness, nodes)
triples.  Keep the two in lockstep when changing either.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll(x)
    #define CTZ64(x) __builtin_ctzll(x)
    """
    int POPCNT64(unsigned long long) nogil
    int CTZ64(unsigned long long) nogil

BACKEND = "compiled"

DEBRUIJN = 0
KAUTZ = 1

FOUND = 0
ABSENT = 1
INCONCLUSIVE = 2

cdef int C_DEBRUIJN = 0
cdef int C_FOUND = 0
cdef int C_ABSENT = 1
cdef int C_INCONCLUSIVE = 2


cdef class KernelTable:
    """Coverage table plus search state for one (family, n, d, k) instance."""

    cdef readonly int family
    cdef readonly int n
    cdef readonly int d
    cdef readonly int k
    cdef readonly int max_ball
    cdef int _words
    cdef uint64_t* _balls
    cdef int32_t* _cov_idx
    cdef int32_t* _cov_dat
    # per-search state
    cdef uint64_t* _cov_stack
    cdef uint64_t* _ban_stack
    cdef int32_t* _chosen
    cdef int64_t _nodes
    cdef int _found_len

    def __cinit__(self, int family, int n, int d, int k):
        if family not in (0, 1):
            raise ValueError(f"unknown family code {family}")
        if n < 1 or d < 1 or k < 0:
            raise ValueError("need n >= 1, d >= 1, k >= 0")
        self.family = family
        self.n = n
        self.d = d
        self.k = k
        self._words = (n + 63) >> 6
        self._balls = NULL
        self._cov_idx = NULL
        self._cov_dat = NULL
        self._cov_stack = NULL
        self._ban_stack = NULL
        self._chosen = NULL
        self._build_balls()
        self._build_coverers()

    def __dealloc__(self):
        free(self._balls)
        free(self._cov_idx)
        free(self._cov_dat)
        free(self._cov_stack)
        free(self._ban_stack)
        free(self._chosen)

    cdef void _build_balls(self) except *:
        cdef int n = self.n, d = self.d, k = self.k, words = self._words
        cdef int v, i, y, head, tail, qlen, step, t
        cdef int64_t base64
        cdef int base, u
        cdef uint64_t* row
        cdef int32_t* queue
        cdef unsigned char* seen
        self._balls = <uint64_t*> calloc(<size_t> n * words, sizeof(uint64_t))
        if self._balls == NULL:
            raise MemoryError()
        queue = <int32_t*> malloc(n * sizeof(int32_t))
        seen = <unsigned char*> calloc(n, 1)
        if queue == NULL or seen == NULL:
            free(queue)
            free(seen)
            raise MemoryError()
        cdef int best = 0, cnt, w
        for v in range(n):
            row = self._balls + <size_t> v * words
            queue[0] = v
            seen[v] = 1
            row[v >> 6] |= (<uint64_t> 1) << (v & 63)
            qlen = 1
            head = 0
            for step in range(k):
                tail = qlen
                if head == tail:
                    break
                while head < tail:
                    u = queue[head]
                    head += 1
                    if self.family == C_DEBRUIJN:
                        base64 = ((<int64_t> d) * u) % n
                    else:
                        base64 = (-(<int64_t> d) * u - d) % n
                        if base64 < 0:
                            base64 += n
                    base = <int> base64
                    for i in range(d):
                        y = base + i
                        if y >= n:
                            y -= n
                        if not seen[y]:
                            seen[y] = 1
                            row[y >> 6] |= (<uint64_t> 1) << (y & 63)
                            queue[qlen] = y
                            qlen += 1
            for t in range(qlen):
                seen[queue[t]] = 0
            cnt = 0
            for w in range(words):
                cnt += POPCNT64(row[w])
            if cnt > best:
                best = cnt
        self.max_ball = best
        free(queue)
        free(seen)

    cdef void _build_coverers(self) except *:
        cdef int n = self.n, words = self._words
        cdef int u, w, v
        cdef uint64_t x
        cdef uint64_t* row
        cdef int32_t* cursor
        self._cov_idx = <int32_t*> calloc(n + 1, sizeof(int32_t))
        cursor = <int32_t*> calloc(n + 1, sizeof(int32_t))
        if self._cov_idx == NULL or cursor == NULL:
            free(cursor)
            raise MemoryError()
        for u in range(n):
            row = self._balls + <size_t> u * words
            for w in range(words):
                x = row[w]
                while x:
                    v = (w << 6) + CTZ64(x)
                    x &= x - 1
                    self._cov_idx[v + 1] += 1
        for v in range(n):
            self._cov_idx[v + 1] += self._cov_idx[v]
            cursor[v] = self._cov_idx[v]
        self._cov_dat = <int32_t*> malloc(
            self._cov_idx[n] * sizeof(int32_t))
        if self._cov_dat == NULL:
            free(cursor)
            raise MemoryError()
        for u in range(n):
            row = self._balls + <size_t> u * words
            for w in range(words):
                x = row[w]
                while x:
                    v = (w << 6) + CTZ64(x)
                    x &= x - 1
                    self._cov_dat[cursor[v]] = u
                    cursor[v] += 1
        free(cursor)

    def ball_mask(self, int v):
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        cdef uint64_t* row = self._balls + <size_t> v * self._words
        cdef int w
        mask = 0
        for w in range(self._words - 1, -1, -1):
            mask = (mask << 64) | row[w]
        return mask

    def coverer_list(self, int v):
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        cdef int32_t idx
        out = []
        for idx in range(self._cov_idx[v], self._cov_idx[v + 1]):
            out.append(self._cov_dat[idx])
        return out

    cdef int _dfs(self, int depth, int remaining, int64_t budget) noexcept:
        cdef int words = self._words
        cdef uint64_t* covered = self._cov_stack + <size_t> depth * words
        cdef uint64_t* banned = self._ban_stack + <size_t> depth * words
        cdef uint64_t* child_cov = self._cov_stack + <size_t> (depth + 1) * words
        cdef uint64_t* child_ban = self._ban_stack + <size_t> (depth + 1) * words
        cdef uint64_t* row
        cdef uint64_t x
        cdef int w, cnt, v, u, r
        cdef int32_t idx
        self._nodes += 1
        if budget >= 0 and self._nodes > budget:
            return C_INCONCLUSIVE
        cnt = 0
        for w in range(words):
            cnt += POPCNT64(covered[w])
        if cnt == self.n:
            self._found_len = depth
            return C_FOUND
        if remaining == 0:
            return C_ABSENT
        if remaining * self.max_ball < self.n - cnt:
            return C_ABSENT
        v = -1
        for w in range(words):
            x = ~covered[w]
            if x != 0:
                v = (w << 6) + CTZ64(x)
                break
        # cnt < n guarantees v is a real vertex
        for idx in range(self._cov_idx[v], self._cov_idx[v + 1]):
            u = self._cov_dat[idx]
            if (banned[u >> 6] >> (u & 63)) & 1:
                continue
            row = self._balls + <size_t> u * words
            for w in range(words):
                child_cov[w] = covered[w] | row[w]
                child_ban[w] = banned[w]
            child_ban[u >> 6] |= (<uint64_t> 1) << (u & 63)
            self._chosen[depth] = u
            r = self._dfs(depth + 1, remaining - 1, budget)
            if r != C_ABSENT:
                return r
            banned[u >> 6] |= (<uint64_t> 1) << (u & 63)
        return C_ABSENT

    def search(self, int size, max_nodes=None):
        """Same contract as the pure kernel: (status, witness, nodes)."""
        if size < 0:
            raise ValueError(f"size must be >= 0, got {size}")
        cdef int64_t budget = -1 if max_nodes is None else <int64_t> max_nodes
        cdef int words = self._words
        cdef size_t levels = size + 1
        free(self._cov_stack)
        free(self._ban_stack)
        free(self._chosen)
        self._cov_stack = <uint64_t*> malloc(levels * words * sizeof(uint64_t))
        self._ban_stack = <uint64_t*> malloc(levels * words * sizeof(uint64_t))
        self._chosen = <int32_t*> malloc((size + 1) * sizeof(int32_t))
        if (self._cov_stack == NULL or self._ban_stack == NULL
                or self._chosen == NULL):
            raise MemoryError()
        memset(self._cov_stack, 0, words * sizeof(uint64_t))
        memset(self._ban_stack, 0, words * sizeof(uint64_t))
        self._nodes = 0
        self._found_len = 0
        cdef int status = self._dfs(0, size, budget)
        nodes = self._nodes
        if status == C_FOUND:
            witness = sorted(self._chosen[t] for t in range(self._found_len))
            return FOUND, witness, nodes
        if status == C_INCONCLUSIVE:
            return INCONCLUSIVE, None, nodes
        return ABSENT, None, nodes

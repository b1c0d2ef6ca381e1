# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset search kernels; see ``_purecore`` for the contract."""

from libc.stdint cimport uint8_t, uint64_t
from libc.stdlib cimport calloc, free, malloc, realloc

MAX_VERTICES = 30


cdef struct Ctx:
    int n
    uint64_t full
    uint64_t alice
    uint64_t bob
    uint64_t closed[64]
    uint8_t *memo


cdef int _load(Ctx *c, closed, uint64_t alice_mask, uint64_t bob_mask) except -1:
    cdef int i
    c.n = len(closed)
    if c.n > MAX_VERTICES:
        raise ValueError(f"compiled kernels support at most {MAX_VERTICES} vertices")
    c.full = (<uint64_t>1 << c.n) - 1
    c.alice = alice_mask
    c.bob = bob_mask
    for i in range(c.n):
        c.closed[i] = closed[i]
    c.memo = NULL
    return 0


cdef bint _wins(Ctx *c, uint64_t dom, int alice_turn) noexcept nogil:
    cdef uint64_t idx = (dom << 1) | <uint64_t>alice_turn
    cdef uint8_t m = c.memo[idx]
    if m:
        return m == 2
    cdef uint64_t movers = c.alice if alice_turn else c.bob
    cdef uint64_t undom = c.full & ~dom
    cdef int v
    cdef bint win = False
    for v in range(c.n):
        if (movers >> v) & 1 and (c.closed[v] & undom):
            if not _wins(c, dom | c.closed[v], 1 - alice_turn):
                win = True
                break
    c.memo[idx] = 2 if win else 1
    return win


def wins(closed, uint64_t alice_mask, uint64_t bob_mask, uint64_t dominated, alice_to_move):
    cdef Ctx c
    _load(&c, closed, alice_mask, bob_mask)
    c.memo = <uint8_t *>calloc(<size_t>1 << (c.n + 1), 1)
    if c.memo == NULL:
        raise MemoryError(f"cannot allocate the win table for {c.n} vertices")
    cdef bint r
    cdef int turn = 1 if alice_to_move else 0
    try:
        with nogil:
            r = _wins(&c, dominated & c.full, turn)
    finally:
        free(c.memo)
    return bool(r)


def explore(closed, uint64_t alice_mask, uint64_t bob_mask, uint64_t dominated):
    cdef Ctx c
    _load(&c, closed, alice_mask, bob_mask)
    cdef uint8_t *seen = <uint8_t *>calloc(<size_t>1 << c.n, 1)
    if seen == NULL:
        raise MemoryError(f"cannot allocate the visited table for {c.n} vertices")
    cdef size_t cap = 1024, top = 0
    cdef uint64_t *stack = <uint64_t *>malloc(cap * sizeof(uint64_t))
    cdef uint64_t *tmp
    cdef uint64_t lbuf[64]
    cdef uint64_t rbuf[64]
    cdef int nl, nr, v, j
    cdef bint dup
    cdef uint64_t dom, undom, nxt, bit
    states = []
    alice_moves = []
    bob_moves = []
    if stack == NULL:
        free(seen)
        raise MemoryError()
    try:
        dominated &= c.full
        seen[dominated] = 1
        stack[0] = dominated
        top = 1
        while top:
            top -= 1
            dom = stack[top]
            undom = c.full & ~dom
            nl = 0
            nr = 0
            for v in range(c.n):
                if not (c.closed[v] & undom):
                    continue
                nxt = dom | c.closed[v]
                bit = <uint64_t>1 << v
                if c.alice & bit:
                    dup = False
                    for j in range(nl):
                        if lbuf[j] == nxt:
                            dup = True
                            break
                    if not dup:
                        lbuf[nl] = nxt
                        nl += 1
                if c.bob & bit:
                    dup = False
                    for j in range(nr):
                        if rbuf[j] == nxt:
                            dup = True
                            break
                    if not dup:
                        rbuf[nr] = nxt
                        nr += 1
                if not seen[nxt]:
                    seen[nxt] = 1
                    if top == cap:
                        cap *= 2
                        tmp = <uint64_t *>realloc(stack, cap * sizeof(uint64_t))
                        if tmp == NULL:
                            raise MemoryError()
                        stack = tmp
                    stack[top] = nxt
                    top += 1
            states.append(dom)
            alice_moves.append([lbuf[j] for j in range(nl)])
            bob_moves.append([rbuf[j] for j in range(nr)])
    finally:
        free(seen)
        free(stack)
    return states, alice_moves, bob_moves

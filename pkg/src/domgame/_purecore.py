"""Pure-Python bitset search kernels.

Same API as the compiled ``_fastcore`` module. A graph is passed as the
list of closed-neighborhood masks plus the masks of vertices each player
may select.
"""

MAX_VERTICES = 64


def _check(closed):
    if len(closed) > MAX_VERTICES:
        raise ValueError(f"bitset kernels support at most {MAX_VERTICES} vertices")


def explore(closed, alice_mask, bob_mask, dominated):
    """All positions reachable from ``dominated``.

    Returns ``(states, alice_moves, bob_moves)``: the reachable dominated
    sets and, per state, the distinct successor states for each player in
    ascending order of the vertex played.
    """
    _check(closed)
    n = len(closed)
    full = (1 << n) - 1
    states = []
    alice_moves = []
    bob_moves = []
    seen = {dominated}
    stack = [dominated]
    while stack:
        dom = stack.pop()
        undom = full & ~dom
        left = []
        right = []
        for v in range(n):
            nb = closed[v]
            if not nb & undom:
                continue
            nxt = dom | nb
            bit = 1 << v
            if alice_mask & bit and nxt not in left:
                left.append(nxt)
            if bob_mask & bit and nxt not in right:
                right.append(nxt)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
        states.append(dom)
        alice_moves.append(left)
        bob_moves.append(right)
    return states, alice_moves, bob_moves


def wins(closed, alice_mask, bob_mask, dominated, alice_to_move):
    """True when the player to move wins under normal play."""
    _check(closed)
    n = len(closed)
    full = (1 << n) - 1
    memo = {}

    def solve(dom, alice_turn):
        key = dom << 1 | alice_turn
        r = memo.get(key)
        if r is None:
            movers = alice_mask if alice_turn else bob_mask
            undom = full & ~dom
            r = False
            for v in range(n):
                nb = closed[v]
                if movers >> v & 1 and nb & undom and not solve(dom | nb, not alice_turn):
                    r = True
                    break
            memo[key] = r
        return r

    return solve(dominated, bool(alice_to_move))

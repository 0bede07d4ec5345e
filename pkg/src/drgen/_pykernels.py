"""Pure-Python max-flow and bipartite matching kernels.

Same contract as the compiled ``_ckernels`` module; used when the extension
is not built. Inputs are flat integer sequences so both backends share one
calling convention.
"""
from collections import deque


def dinic(n, tails, heads, caps, source, sink):
    """Dinic max flow over an arc list.

    Returns ``(value, flows, reachable)``: flow value, per-arc flow aligned
    with the input arcs, and a 0/1 list marking nodes reachable from the
    source in the final residual network (the canonical minimum cut).
    Augmentation order depends only on the arc order.
    """
    m = len(tails)
    to = [0] * (2 * m)
    res = [0] * (2 * m)
    deg = [0] * (n + 1)
    for i in range(m):
        to[2 * i] = heads[i]
        to[2 * i + 1] = tails[i]
        res[2 * i] = caps[i]
        deg[tails[i] + 1] += 1
        deg[heads[i] + 1] += 1
    for v in range(n):
        deg[v + 1] += deg[v]
    start = deg
    adj = [0] * (2 * m)
    fill = start[:-1]
    for i in range(m):
        adj[fill[tails[i]]] = 2 * i
        fill[tails[i]] += 1
        adj[fill[heads[i]]] = 2 * i + 1
        fill[heads[i]] += 1

    total = 0
    while True:
        level = [-1] * n
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for p in range(start[u], start[u + 1]):
                e = adj[p]
                v = to[e]
                if res[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        if level[sink] < 0:
            break
        it = start[:-1]
        path = []
        u = source
        while True:
            if u == sink:
                push = min(res[e] for e in path)
                for e in path:
                    res[e] -= push
                    res[e ^ 1] += push
                total += push
                path = []
                u = source
                continue
            end = start[u + 1]
            p = it[u]
            while p < end:
                e = adj[p]
                if res[e] > 0 and level[to[e]] == level[u] + 1:
                    break
                p += 1
            it[u] = p
            if p == end:
                if u == source:
                    break
                level[u] = -1
                e = path.pop()
                u = to[e ^ 1]
                it[u] += 1
            else:
                e = adj[p]
                path.append(e)
                u = to[e]

    reach = [0] * n
    reach[source] = 1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for p in range(start[u], start[u + 1]):
            e = adj[p]
            v = to[e]
            if res[e] > 0 and not reach[v]:
                reach[v] = 1
                queue.append(v)
    flows = [res[2 * i + 1] for i in range(m)]
    return total, flows, reach


def hopcroft_karp(n_left, n_right, indptr, indices):
    """Maximum bipartite matching.

    ``indptr``/``indices`` give each left vertex's right neighbours (CSR).
    Returns ``(match_left, match_right)`` with -1 marking free vertices.
    """
    INF = n_left + n_right + 2
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    while True:
        dist = [INF] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] < 0:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for p in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[p]]
                if w < 0:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break
        it = list(indptr[:n_left])
        for root in range(n_left):
            if match_l[root] >= 0:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                advanced = False
                while it[u] < indptr[u + 1]:
                    v = indices[it[u]]
                    w = match_r[v]
                    if w < 0:
                        # augment along the stack
                        for uu in stack:
                            vv = indices[it[uu]]
                            match_l[uu] = vv
                            match_r[vv] = uu
                        stack = []
                        advanced = True
                        break
                    if dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                    it[u] += 1
                if not advanced:
                    dist[u] = INF
                    stack.pop()
                    if stack:
                        it[stack[-1]] += 1
    return match_l, match_r

# distutils: language = c++
"""Compiled max-flow and bipartite matching kernels (see _pykernels for the contract)."""
from libcpp.vector cimport vector

ctypedef long long i64


def dinic(int n, tails, heads, caps, int source, int sink):
    cdef int m = len(tails)
    cdef vector[int] to = vector[int](2 * m)
    cdef vector[i64] res = vector[i64](2 * m)
    cdef vector[int] start = vector[int](n + 1, 0)
    cdef vector[int] adj = vector[int](2 * m)
    cdef vector[int] fill
    cdef vector[int] level = vector[int](n)
    cdef vector[int] it
    cdef vector[int] queue = vector[int](n)
    cdef vector[int] path
    cdef int i, u, v, e, p, end, qh, qt, t, h
    cdef i64 push, total = 0
    cdef vector[char] seen = vector[char](n, 0)

    for i in range(m):
        t = tails[i]
        h = heads[i]
        to[2 * i] = h
        to[2 * i + 1] = t
        res[2 * i] = caps[i]
        res[2 * i + 1] = 0
        start[t + 1] += 1
        start[h + 1] += 1
    for v in range(n):
        start[v + 1] += start[v]
    fill = vector[int](start.begin(), start.end() - 1)
    for i in range(m):
        t = to[2 * i + 1]
        h = to[2 * i]
        adj[fill[t]] = 2 * i
        fill[t] += 1
        adj[fill[h]] = 2 * i + 1
        fill[h] += 1

    while True:
        for v in range(n):
            level[v] = -1
        level[source] = 0
        qh = 0
        qt = 0
        queue[qt] = source
        qt += 1
        while qh < qt:
            u = queue[qh]
            qh += 1
            for p in range(start[u], start[u + 1]):
                e = adj[p]
                v = to[e]
                if res[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue[qt] = v
                    qt += 1
        if level[sink] < 0:
            break
        it = vector[int](start.begin(), start.end() - 1)
        path.clear()
        u = source
        while True:
            if u == sink:
                push = res[path[0]]
                for i in range(<int>path.size()):
                    if res[path[i]] < push:
                        push = res[path[i]]
                for i in range(<int>path.size()):
                    res[path[i]] -= push
                    res[path[i] ^ 1] += push
                total += push
                path.clear()
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
                e = path.back()
                path.pop_back()
                u = to[e ^ 1]
                it[u] += 1
            else:
                e = adj[p]
                path.push_back(e)
                u = to[e]

    reach = [0] * n
    seen[source] = 1
    qh = 0
    qt = 0
    queue[qt] = source
    qt += 1
    while qh < qt:
        u = queue[qh]
        qh += 1
        for p in range(start[u], start[u + 1]):
            e = adj[p]
            v = to[e]
            if res[e] > 0 and not seen[v]:
                seen[v] = 1
                queue[qt] = v
                qt += 1
    for v in range(n):
        reach[v] = seen[v]
    flows = [res[2 * i + 1] for i in range(m)]
    return total, flows, reach


def hopcroft_karp(int n_left, int n_right, indptr_in, indices_in):
    cdef vector[int] indptr = indptr_in
    cdef vector[int] indices = indices_in
    cdef int INF = n_left + n_right + 2
    cdef vector[int] match_l = vector[int](n_left, -1)
    cdef vector[int] match_r = vector[int](n_right, -1)
    cdef vector[int] dist = vector[int](n_left)
    cdef vector[int] queue = vector[int](n_left + 1)
    cdef vector[int] it
    cdef vector[int] stack
    cdef int u, v, w, p, qh, qt, root, uu, vv, i
    cdef bint found, advanced
    while True:
        qh = 0
        qt = 0
        for u in range(n_left):
            if match_l[u] < 0:
                dist[u] = 0
                queue[qt] = u
                qt += 1
            else:
                dist[u] = INF
        found = False
        while qh < qt:
            u = queue[qh]
            qh += 1
            for p in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[p]]
                if w < 0:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue[qt] = w
                    qt += 1
        if not found:
            break
        it = vector[int](indptr.begin(), indptr.begin() + n_left)
        for root in range(n_left):
            if match_l[root] >= 0:
                continue
            stack.clear()
            stack.push_back(root)
            while stack.size() > 0:
                u = stack.back()
                advanced = False
                while it[u] < indptr[u + 1]:
                    v = indices[it[u]]
                    w = match_r[v]
                    if w < 0:
                        for i in range(<int>stack.size()):
                            uu = stack[i]
                            vv = indices[it[uu]]
                            match_l[uu] = vv
                            match_r[vv] = uu
                        stack.clear()
                        advanced = True
                        break
                    if dist[w] == dist[u] + 1:
                        stack.push_back(w)
                        advanced = True
                        break
                    it[u] += 1
                if not advanced:
                    dist[u] = INF
                    stack.pop_back()
                    if stack.size() > 0:
                        it[stack.back()] += 1
    return list(match_l), list(match_r)

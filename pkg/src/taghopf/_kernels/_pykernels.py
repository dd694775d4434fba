"""Pure-Python kernels.

These are the reference versions of the routines in ``_ckernels.pyx``; both
modules expose the same three functions and must return identical values.

Edges are passed as tuples of ``(u, v)`` pairs of integer vertex ids.  Only
vertices that occur in some edge exist as far as the kernels are concerned.
"""

__all__ = ["canonical_edges", "split_subset", "coproduct_counts"]


def canonical_edges(edges):
    """Lexicographically least relabelled edge sequence.

    The edge order is fixed, so the minimum over all vertex renumberings is
    reached by numbering vertices in order of first appearance.  The only
    freedom left is which endpoint of an edge with two unseen endpoints gets
    the smaller label; all such choices are carried along and pruned to the
    ones that produce the least pair at every position.  States that agree
    on every vertex still to be seen are merged.
    """
    if not edges:
        return ()
    last = {}
    for i, (u, v) in enumerate(edges):
        last[u] = i
        last[v] = i

    states = [{}]
    nxt = 1
    out = []
    for i, (u, v) in enumerate(edges):
        if u == v:
            lab = states[0]
            if u in lab:
                # fresh/seen status does not depend on the state
                best = None
                keep = []
                for lab in states:
                    a = lab[u]
                    if best is None or a < best:
                        best = a
                        keep = [lab]
                    elif a == best:
                        keep.append(lab)
                out.append((best, best))
                states = keep
            else:
                for lab in states:
                    lab[u] = nxt
                out.append((nxt, nxt))
                nxt += 1
        else:
            seen_u = u in states[0]
            seen_v = v in states[0]
            if seen_u and seen_v:
                best = None
                keep = []
                for lab in states:
                    a, b = lab[u], lab[v]
                    pair = (a, b) if a < b else (b, a)
                    if best is None or pair < best:
                        best = pair
                        keep = [lab]
                    elif pair == best:
                        keep.append(lab)
                out.append(best)
                states = keep
            elif seen_u or seen_v:
                old, new = (u, v) if seen_u else (v, u)
                best = None
                keep = []
                for lab in states:
                    a = lab[old]
                    if best is None or a < best:
                        best = a
                        keep = [lab]
                    elif a == best:
                        keep.append(lab)
                for lab in keep:
                    lab[new] = nxt
                out.append((best, nxt))
                nxt += 1
                states = keep
            else:
                branched = []
                for lab in states:
                    other = dict(lab)
                    lab[u] = nxt
                    lab[v] = nxt + 1
                    other[u] = nxt + 1
                    other[v] = nxt
                    branched.append(lab)
                    branched.append(other)
                out.append((nxt, nxt + 1))
                nxt += 2
                states = branched

        # forget vertices that never occur again, then merge equal states
        for x in (u, v):
            if last[x] == i:
                for lab in states:
                    lab.pop(x, None)
        if len(states) > 1:
            uniq = {}
            for lab in states:
                uniq.setdefault(frozenset(lab.items()), lab)
            states = list(uniq.values())
    return tuple(out)


def _find(parent, x):
    root = x
    while parent.get(root, root) != root:
        root = parent[root]
    while parent.get(x, x) != root:
        parent[x], x = root, parent[x]
    return root


def split_subset(edges, mask):
    """Return canonical ``(subgraph, quotient)`` edge tuples for a bitmask.

    Bit ``i`` of ``mask`` selects ``edges[i]``.  The quotient collapses every
    connected component of the selected edges to one vertex; vertices left
    without edges disappear.
    """
    sub = []
    rest = []
    parent = {}
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1:
            sub.append((u, v))
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[ru] = rv
        else:
            rest.append((u, v))
    quot = [(_find(parent, u), _find(parent, v)) for u, v in rest]
    return canonical_edges(sub), canonical_edges(quot)


def coproduct_counts(edges, lo, hi):
    """Collect ``split_subset`` over masks ``lo <= mask < hi``.

    Returns a dict mapping ``(subgraph, quotient)`` to its multiplicity.
    """
    counts = {}
    for mask in range(lo, hi):
        key = split_subset(edges, mask)
        counts[key] = counts.get(key, 0) + 1
    return counts

"""Branch tree for rebuilding an optimal order after a fast solve.

The fast solver keeps candidate lists only as (x, delta) pairs, so the lists
themselves are gone when it finishes. What it does keep is one lineage leaf per
live candidate. Whenever a step keeps a list spawned by swapping i with the last
interval m, the parent's lineage leaf becomes a branch node labelled i with two
children: the append child (edge pair (m, i)) and the swap child (edge pair
(i, m)).

Replaying the root-to-leaf path of the optimal candidate, together with the
ordinary append/insert rules for every other step, rebuilds its order in O(n).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.core.exceptions import ReconstructionError
from src.core.model import Instance
from src.utils.logging import get_logger

logger = get_logger("solvers.reconstruction")


@dataclass(eq=False)
class BranchNode:
    """A node of the branch tree.

    Leaves have ``branch_interval`` None. ``pair`` is the ordered pair stored on
    the edge from the parent, None at the root.
    """

    parent: Optional["BranchNode"] = None
    pair: Optional[Tuple[int, int]] = None
    branch_interval: Optional[int] = None
    children: Tuple["BranchNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.branch_interval is None

    def path_from_root(self) -> List["BranchNode"]:
        """Nodes from the root down to this one."""
        path = []
        node: Optional[BranchNode] = self
        while node is not None:
            path.append(node)
            node = node.parent
        path.reverse()
        return path


@dataclass(eq=False)
class Lineage:
    """The branch tree of one fast solve.

    ``opt_leaf`` and ``delta`` are filled in when the solve finishes.
    """

    root: BranchNode = field(default_factory=BranchNode)
    internal_count: int = 0
    opt_leaf: Optional[BranchNode] = None
    delta: Optional[Fraction] = None

    def finish(self, opt_leaf: BranchNode, delta: Fraction) -> None:
        self.opt_leaf = opt_leaf
        self.delta = delta


def record_spawn(
    lineage: Lineage, parent_leaf: BranchNode, i: int, m: int
) -> Tuple[BranchNode, BranchNode]:
    """Split a lineage leaf because its list spawned a kept swapped twin.

    Args:
        lineage: Branch tree to update
        parent_leaf: Lineage leaf of the list that spawned
        i: Interval being processed
        m: Last interval of the list before the step

    Returns:
        Tuple of (append child, swap child)
    """
    if not parent_leaf.is_leaf:
        raise ReconstructionError(
            f"lineage node already branched on {parent_leaf.branch_interval}, cannot branch on {i}"
        )
    child_append = BranchNode(parent=parent_leaf, pair=(m, i))
    child_swap = BranchNode(parent=parent_leaf, pair=(i, m))
    parent_leaf.branch_interval = i
    parent_leaf.children = (child_append, child_swap)
    lineage.internal_count += 1
    return child_append, child_swap


def replay(
    inst: Instance, lineage: Lineage, opt_leaf: Optional[BranchNode] = None
) -> Tuple[int, ...]:
    """Rebuild the order of the candidate that ends at ``opt_leaf``.

    Steps that match a branch node on the path follow the edge pair. Every
    other step re-derives what the solver did from the placement built so far:
    append when i ends at or after the last interval, insert before the last
    interval when i fits at its position, and append otherwise.

    Args:
        inst: The instance that was solved
        lineage: Branch tree filled in by the fast solver
        opt_leaf: Leaf to replay; defaults to ``lineage.opt_leaf``

    Returns:
        Order of sorted indices

    Raises:
        ReconstructionError: if the path is inconsistent with the instance, or
            if replaying the solver's optimal leaf gives a delta other than the
            one the solver reported
    """
    leaf = opt_leaf if opt_leaf is not None else lineage.opt_leaf
    if leaf is None:
        raise ReconstructionError("lineage has no optimal leaf; run the fast solver first")

    path = leaf.path_from_root()
    lefts, rights, lengths = inst.lefts, inst.rights, inst.lengths

    order: List[int] = [1]
    positions: Dict[int, object] = {1: lefts[1]}
    prev_end = None  # right end of the interval before the last one
    delta = 0
    k = 0  # index into path of the next branch node

    for i in range(2, inst.n + 1):
        m = order[-1]
        node = path[k]
        if not node.is_leaf and node.branch_interval < i:
            raise ReconstructionError(
                f"branch on interval {node.branch_interval} was never reached (now at {i})"
            )

        if not node.is_leaf and node.branch_interval == i:
            pair = path[k + 1].pair
            k += 1
            if pair == (m, i):
                insert = False
            elif pair == (i, m):
                insert = True
            else:
                raise ReconstructionError(
                    f"edge pair {pair} at interval {i} does not match last interval {m}"
                )
        elif rights[i] >= rights[m]:
            insert = False
        else:
            insert = lefts[i] <= positions[m]

        if insert:
            pos_i = lefts[i] if prev_end is None or prev_end < lefts[i] else prev_end
            end_i = pos_i + lengths[i]
            pos_m = end_i if end_i > lefts[m] else lefts[m]
            positions[i] = pos_i
            positions[m] = pos_m
            order.insert(len(order) - 1, i)
            prev_end = end_i
            delta = max(delta, pos_i - lefts[i], pos_m - lefts[m])
        else:
            end_m = positions[m] + lengths[m]
            pos_i = end_m if end_m > lefts[i] else lefts[i]
            positions[i] = pos_i
            order.append(i)
            prev_end = end_m
            delta = max(delta, pos_i - lefts[i])

    if k != len(path) - 1:
        raise ReconstructionError(f"{len(path) - 1 - k} branch node(s) left unused after replay")

    delta = Fraction(delta)
    if leaf is lineage.opt_leaf and lineage.delta is not None and delta != lineage.delta:
        raise ReconstructionError(
            f"replayed delta {delta} differs from solver delta {lineage.delta}",
            expected=lineage.delta,
            actual=delta,
        )
    logger.debug(f"Replayed order of {len(order)} intervals through {k} branch node(s)")
    return tuple(order)

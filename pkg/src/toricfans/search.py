"""Breadth-first search of the wall-surgery graph for a projective model.

Nodes are fans on the fixed ray set, deduplicated by canonical key; edges
are the flip/flop/anti-flip wall exchanges. `projectivize` stops at the
first projective fan, so the returned sequence has minimum length over the
explored edge relation, with ties broken by wall order and then discovery
order. Failure at the depth bound proves nothing: the search is a
semi-decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCompleteError
from .fan import Fan, canonical_key, is_complete, is_smooth, walls
from .projectivity import is_projective
from .surgery import MODIFIABLE, SurgeryStep, WallKind, classify_wall, perform_surgery


@dataclass(frozen=True)
class SearchResult:
    found: bool
    steps: tuple[SurgeryStep, ...]
    final_fan: Fan
    final_smooth: bool
    visited: int
    depth_reached: int


@dataclass(frozen=True)
class GraphNode:
    key: tuple
    smooth: bool
    projective: bool


@dataclass(frozen=True)
class GraphEdge:
    source: tuple
    target: tuple
    wall_rays: tuple[int, ...]
    kind: WallKind
    degree: int


@dataclass(frozen=True)
class SurgeryGraph:
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]


def _neighbors(fan: Fan, flops_only: bool):
    for wall in walls(fan):
        kind = classify_wall(fan, wall).kind
        if kind not in MODIFIABLE:
            continue
        if flops_only and kind is not WallKind.FLOP:
            continue
        yield perform_surgery(fan, wall)


def projectivize(fan: Fan, max_depth: int = 4, flops_only: bool = False) -> SearchResult:
    """Search for a projective fan within `max_depth` wall exchanges."""
    if not is_complete(fan):
        raise NotCompleteError("projectivize needs a complete fan")
    start_key = canonical_key(fan)
    if is_projective(fan)[0]:
        return SearchResult(True, (), fan, is_smooth(fan), 1, 0)
    seen = {start_key}
    trail: dict[tuple, tuple[tuple, SurgeryStep]] = {}
    level: list[tuple[Fan, tuple]] = [(fan, start_key)]
    visited = 1
    depth_reached = 0
    for depth in range(1, max_depth + 1):
        next_level: list[tuple[Fan, tuple]] = []
        for node, node_key in level:
            for child, step in _neighbors(node, flops_only):
                key = step.after_key
                if key in seen:
                    continue
                seen.add(key)
                visited += 1
                trail[key] = (node_key, step)
                depth_reached = depth
                if is_projective(child)[0]:
                    steps = []
                    cursor = key
                    while cursor != start_key:
                        cursor, back = trail[cursor]
                        steps.append(back)
                    steps.reverse()
                    return SearchResult(
                        True, tuple(steps), child, is_smooth(child), visited, depth
                    )
                next_level.append((child, key))
        level = next_level
        if not level:
            break
    return SearchResult(False, (), fan, is_smooth(fan), visited, depth_reached)


def surgery_graph(fan: Fan, max_depth: int, flops_only: bool = False) -> SurgeryGraph:
    """The surgery graph out to a fixed depth, in deterministic BFS order."""
    if not is_complete(fan):
        raise NotCompleteError("surgery_graph needs a complete fan")
    start_key = canonical_key(fan)
    nodes = [GraphNode(start_key, is_smooth(fan), is_projective(fan)[0])]
    node_keys = {start_key}
    edges: list[GraphEdge] = []
    level = [(fan, start_key)]
    for _ in range(max_depth):
        next_level = []
        for node, node_key in level:
            for child, step in _neighbors(node, flops_only):
                key = step.after_key
                edges.append(
                    GraphEdge(node_key, key, step.wall_rays, step.kind, step.degree)
                )
                if key in node_keys:
                    continue
                node_keys.add(key)
                nodes.append(GraphNode(key, is_smooth(child), is_projective(child)[0]))
                next_level.append((child, key))
        level = next_level
        if not level:
            break
    return SurgeryGraph(tuple(nodes), tuple(edges))

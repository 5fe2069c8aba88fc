"""Single-parameter corruptions of replay scripts.

Each corruption flips exactly one parameter of one rule while keeping all
positions in range, so a corrupted replay must fail through a side
condition or end on a final mismatch, never through a malformed script.
"""

from __future__ import annotations

from dataclasses import replace

from delpezzo.mutations import MutationRule, ReplayScript


def _variants(rule: MutationRule, n_nodes: int) -> list[MutationRule]:
    out = []
    r = rule.rule_id
    if r == "serre_rotate":
        out.append(replace(rule, direction="right" if rule.direction == "left" else "left"))
        if rule.position_end > rule.position:
            out.append(replace(rule, position_end=rule.position_end - 1))
        if rule.position > 1:
            out.append(replace(rule, position=rule.position - 1))
    elif r == "triangle_exchange":
        out.append(replace(rule, direction=rule.direction % 3 + 1))
        out.append(replace(rule, support="D" if rule.support == "E" else "E"))
        for p in (rule.position - 1, rule.position + 1):
            if 1 <= p <= n_nodes - 1:
                out.append(replace(rule, position=p))
    elif r == "swap":
        for p in (rule.position - 1, rule.position + 1):
            if 1 <= p <= n_nodes - 1:
                out.append(replace(rule, position=p))
    elif r == "fiber_rebase":
        out.append(replace(rule, shift="+F" if rule.shift == "-F" else "-F"))
        for p in (rule.position - 1, rule.position + 1):
            if 1 <= p <= n_nodes - 1:
                out.append(replace(rule, position=p))
    elif r == "opaque_transpose":
        out.append(replace(rule, direction="right" if rule.direction == "left" else "left"))
        for p in (rule.position - 1, rule.position + 1):
            if 1 <= p <= n_nodes:
                out.append(replace(rule, position=p))
    elif r == "expand_blowup":
        out.append(replace(rule, center="C" if rule.center == "L" else "L"))
        out.append(replace(rule, codim=3))
    return [v for v in out if v != rule]


def corrupted_scripts(script: ReplayScript, n_nodes: int = 6):
    """Yield (step index, corrupted script) for every single-rule flip."""
    for idx, rule in enumerate(script.rules):
        for variant in _variants(rule, n_nodes):
            rules = script.rules[:idx] + (variant,) + script.rules[idx + 1:]
            yield idx + 1, replace(script, rules=rules)

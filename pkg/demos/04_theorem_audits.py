"""Check theorem hypotheses on concrete instances and run a fuzz campaign.

Each checker evaluates every hypothesis separately and, when asked,
confirms the predicted factor by actually constructing it.  The campaign
runs seeded random trials and reports any discrepancy between prediction
and solver outcome (there should never be one).
"""

from ffactors import (
    check_main_theorem,
    check_theorem_regular_connectivity,
    complete_graph,
    constant_spec,
    empirical_validate,
    g0_desk_instance,
)

# K_5 with f = 2: every hypothesis of the main existence result holds
g = complete_graph(5)
report = check_main_theorem(g, constant_spec(g, 2), 2, 2, confirm=True)
print("K_5, f = 2, main theorem:")
for h in report.hypotheses:
    print(f"  {h.name}: {'ok' if h.satisfied else 'FAIL'} ({h.observed})")
print(f"  conclusion: {report.conclusion}, "
      f"confirmation: {report.confirmation}")

# the g0 family fails exactly one hypothesis: odd-toughness
built = g0_desk_instance()
report = check_main_theorem(built.graph, built.spec, 2, 3)
failed = [h.name for h in report.hypotheses if not h.satisfied]
print(f"\ng0 desk instance fails only: {failed}")

# regular-graph criterion with r = 1 on K_4: a perfect matching
report = check_theorem_regular_connectivity(complete_graph(4), 1, confirm=True)
print(f"\nK_4 1-factor check: met={report.hypotheses_met}, "
      f"confirmation={report.confirmation}")

# seeded campaign: 200 random instances, prediction vs solver
campaign = empirical_validate("main", 200, seed=7)
print(f"\nfuzz campaign, 200 trials: {campaign.hypotheses_met} met all "
      f"hypotheses, {len(campaign.discrepancies)} discrepancies")

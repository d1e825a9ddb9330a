"""Run every registered scenario and print a one-line summary each."""
from retroframes import list_scenarios, run_scenario

for spec in list_scenarios():
    rep = run_scenario(spec.name)
    status = "PASS" if rep.passed else "FAIL"
    print(f"{status} {spec.name:<9} n={rep.n:<3} {len(rep.checks):>2} checks  ({spec.anchor})")
    for note in rep.notes:
        print("     ", note)

"""
Property suites
===============

The same suites the ``oracles`` subcommand runs, with smaller bounds so the
script finishes in a few seconds.
"""

from cyclicweights import oracles

for res in [
    oracles.lemma31(max_r=81),
    oracles.lemma32(max_card=2000),
    oracles.lemma33(),
    oracles.weil(),
    oracles.periods(max_r=300),
]:
    print(res.line())
    for label in res.failures:
        print("   ", label)

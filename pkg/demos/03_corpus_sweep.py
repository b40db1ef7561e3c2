"""Sweep every criterion over the built-in groups of order at most 60.

This prints the status histogram, any expected counterexamples (the
weakened corollaries), and the subgroups on which the two chief-factor
readings of the Π-property give different answers.  Pass a larger bound as
the first argument to widen the corpus.
"""
import sys
from collections import Counter

from pinilot.corpus import CorpusConfig, builtin_corpus
from pinilot.harness import SweepConfig, run_corpus

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 60
corpus = builtin_corpus(CorpusConfig(max_order=bound))
report = run_corpus(corpus, SweepConfig())
print(f"{len(corpus)} groups of order <= {bound}, {len(report.verdicts)} verdicts, "
      f"{report.timing['total']:.1f} s")
for status, n in report.histogram().items():
    print(f"  {status:24s} {n}")

print("\nexpected counterexamples")
for v in report.expected_counterexamples:
    print(f"  {v.check_id:32s} {v.group:14s} p = {v.p}")

print("\nchief-reading disagreements")
per_group = Counter(f["group"] for f in report.flags)
for name, n in per_group.items():
    print(f"  {name}: {n} subgroup(s)")
for note in report.notes:
    print("note:", note)
sys.exit(report.exit_code)

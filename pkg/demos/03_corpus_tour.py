"""The worked-example corpus: what it holds and how it is checked."""
from collections import Counter

from quarticrank.corpus import clause_coverage, load_corpus, verify_corpus

entries = load_corpus()
print(len(entries), "entries")
print("by l:   ", dict(sorted(Counter(e.l for e in entries).items())))
print("by rank:", dict(sorted(Counter(e.expected_rank for e in entries).items())))

for e in entries[:5]:
    print(f"  n = {'*'.join(map(str, e.n_factors)) or '1':<10} l = {e.l:<5} "
          f"type {e.quoted_type:<8} -> rank {e.expected_rank}   [{e.source}]")

report = verify_corpus()
print("all entries reproduce on both engines:", report.ok)

cov = clause_coverage()
thin = [tag for tag, count in cov.items() if count == 1]
print(f"{len(cov)} clauses with printed examples, {len(thin)} covered by exactly one entry")

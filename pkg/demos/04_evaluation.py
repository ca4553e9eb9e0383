"""
Scoring a pipeline on a dataset
===============================

The bundled synthetic corpus pairs every abstract form with a
belief-consistent and a belief-inconsistent wording. A purely formal
pipeline should show no content effect at all.
"""

from importlib import resources

from syllostruct.evaluation import evaluate, load_dataset

path = resources.files("syllostruct").joinpath("data", "synthetic_corpus.jsonl")
records = load_dataset(path)
print(records[0].sentences)
print(records[1].sentences)

report = evaluate(records, "rules")
print(report.summary())

# replaying recorded LLM normalizations of non-English arguments
fixtures = load_dataset(resources.files("syllostruct").joinpath("data", "fixture_dataset.jsonl"))
for row in evaluate(fixtures, "fixtures").records:
    print(f"{row.id:12} gold={sorted(row.gold_relevant)} predicted={sorted(row.predicted_relevant)} basis={row.basis}")

from importlib import resources

from syllostruct.corpus import (
    TEMPLATES,
    entailing_subsets,
    relevance_instances,
    render,
    trivial_cases,
    validity_records,
)
from syllostruct.core import Proposition, PropositionForm
from syllostruct.evaluation import load_dataset
from syllostruct.normalization import normalize_en


def test_every_template_normalizes_back():
    for form, templates in TEMPLATES.items():
        prop = Proposition(form, "root vegetables", "big cats")
        for k in range(len(templates)):
            assert normalize_en(render(prop, k)) == prop


def test_validity_records_shape():
    recs = validity_records()
    assert len(recs) == 512
    assert sum(r.gold_validity for r in recs) == 48
    assert {r.plausibility_group for r in recs} == {"consistent", "inconsistent"}
    assert len({r.id for r in recs}) == 512


def test_relevance_instances_are_oracle_checked():
    for inst in relevance_instances(20, seed=3):
        terms = {t for p in inst.premises + (inst.conclusion,) for t in p.terms}
        assert len(terms) <= 4
        assert len(inst.premises) <= 6
        hits = entailing_subsets(inst.premises, inst.conclusion)
        assert hits == ([inst.gold] if inst.gold else [])


def test_generation_is_seeded():
    assert relevance_instances(5, seed=9) == relevance_instances(5, seed=9)
    assert trivial_cases(20, seed=1) == trivial_cases(20, seed=1)


def test_bundled_corpus_matches_generator():
    path = resources.files("syllostruct").joinpath("data", "synthetic_corpus.jsonl")
    bundled = load_dataset(path)
    assert len(bundled) >= 500
    assert bundled[:512] == validity_records()

"""
Finding the premises that matter
================================

Given many sentences and one conclusion, the selector returns the first
pair that forms a valid syllogism, or an empty set when none does.
"""

from syllostruct.core import Proposition as P
from syllostruct.corpus import entailing_subsets, relevance_instances
from syllostruct.relevance import select_relevant

sentences = [
    P("E", "circles", "three-sided figures"),
    P("I", "isosceles triangles", "three-sided figures"),
    P("A", "scalene triangles", "three-sided figures"),
    P("A", "equilateral triangles", "three-sided figures"),
    P("A", "triangles", "three-sided figures"),
    P("E", "circles", "triangles"),
]
conclusion = P("E", "triangles", "circles")

verdict, chosen = select_relevant(sentences, conclusion)
print(verdict, sorted(chosen))

# the oracle sees more: sentence 5 alone already entails the conclusion by conversion,
# but the selector prefers a genuine two-premise syllogism when one exists
print("entailing subsets:", [sorted(s) for s in entailing_subsets(sentences, conclusion)])

# a few generated instances with distractors
for inst in relevance_instances(5, seed=1):
    verdict, chosen = select_relevant(inst.premises, inst.conclusion)
    print(f"{len(inst.premises)} premises  gold={sorted(inst.gold)}  got={sorted(chosen)}  {verdict}")

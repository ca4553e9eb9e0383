"""
Judging single arguments
========================

Canonical text goes through parsing, term-role analysis and the lookup
table. Paraphrased English is first rewritten by the rule table.
"""

from syllostruct import analyze, judge, parse_canonical
from syllostruct.normalization import normalize_argument, normalize_en
from syllostruct.validity import ValidityConfig

# a symbolic argument: the middle term is the predicate of both premises
text = "All B are A. All C are A. All C are B."
st = analyze(parse_canonical(text))
print(f"S={st.S} P={st.P} M={st.M} mood={st.mood} figure={int(st.figure)}")
print(judge(text))

# Barbara, and its weakened conclusion with and without existential import
print(judge("All M are P. All S are M. All S are P."))
barbari = "All M are P. All S are M. Some S are P."
print(judge(barbari), "|", judge(barbari, ValidityConfig(existential_import=False)))

# restating a premise is valid for trivial reasons, not because of its form
print(judge("all a are b. some c are d. all a are b."))

# English paraphrases
for sentence in ("Every single puppy is a kitten.",
                 "There are no carrots that are not edible.",
                 "Not every bird is a flyer.",
                 "Reptiles cannot be mammals."):
    print(f"{sentence:45} -> {normalize_en(sentence)}")

result = normalize_argument("All M are P. Every S is an M. Therefore, all S are P.")
print(result.mapped, "|", result.parsed, "|", judge(result.parsed))

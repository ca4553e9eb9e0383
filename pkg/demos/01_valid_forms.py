"""
Where the table of valid forms comes from
=========================================

The lookup table is never trusted on its own: every (mood, figure) pair is
re-derived by enumerating small models, with and without the assumption
that terms are nonempty.
"""

from syllostruct import oracle
from syllostruct.validity import VALIDITY_TABLE, format_table

# derive the table by brute force over models of up to 4 elements
derived = oracle.valid_forms(existential_import=True)
print(format_table(derived))
print("matches built-in table:", derived == VALIDITY_TABLE)

# drop existential import and see which forms stop being valid
weak = oracle.valid_forms(existential_import=False)
for figure in derived:
    lost = sorted(derived[figure] - weak[figure])
    print(f"figure {int(figure)} loses {', '.join(lost)}")

# Barbari needs a nonempty minor term; here is a countermodel without it
from syllostruct.core import Proposition
from syllostruct.oracle import Model, eval_proposition

premises = [Proposition("A", "m", "p"), Proposition("A", "s", "m")]
conclusion = Proposition("I", "s", "p")
empty_s = Model(1, {"s": set(), "m": {0}, "p": {0}})
print("premises hold:", all(eval_proposition(p, empty_s) for p in premises))
print("conclusion holds:", eval_proposition(conclusion, empty_s))

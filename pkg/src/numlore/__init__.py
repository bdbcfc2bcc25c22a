"""Exact number theory after the medieval Arabic mathematicians.

Amicable and perfect numbers, Chinese remaindering, sums of powers,
rational Diophantine parameterizations, cube radicals, a generalized
Pythagorean theorem and three classical division puzzles.
"""

__version__ = "0.1.0"

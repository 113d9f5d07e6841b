"""Bundled example proofs: the worked rule-by-rule proofs plus teaching cases.

GOLDEN lists the twelve valid proofs that exercise every inference rule once;
EXAMPLES adds the countermodel, incomplete and error demonstrations used by
the CLI docs and the web editor.
"""

IDENTITY = """\
1. T A pre
2. F A conclusion
3. @ 1,2
"""

DOUBLE_NEGATION = """\
1. T A pre
2. F ~~A conclusion
3. T ~A 2
4. F A 3
5. @ 1,4
"""

AND_INTRO = """\
1. T A pre
2. T B pre
3. F A&B conclusion
4. { F A 3
5.   @ 1,4 }
6. { F B 3
7.   @ 2,6 }
"""

AND_ELIM = """\
1. T A&B pre
2. F A conclusion
3. T A 1
4. T B 1
5. @ 2,3
"""

OR_ELIM = """\
1. T A|B pre
2. T ~B pre
3. F A conclusion
4. F B 2
5. { T A 1
6.   @ 3,5 }
7. { T B 1
8.   @ 4,7 }
"""

OR_INTRO = """\
1. T A pre
2. F A|B conclusion
3. F A 2
4. F B 2
5. @ 1,3
"""

IMPLICATION_TRUE = """\
1. T ~A->B pre
2. F A|B conclusion
3. F A 2
4. F B 2
5. { F ~A 1
6.   T A 5
7.   @ 6,3 }
8. { T B 1
9.   @ 8,4 }
"""

IMPLICATION_FALSE = """\
1. T B pre
2. F A->B conclusion
3. T A 2
4. F B 2
5. @ 1,4
"""

FORALL_TRUE = """\
1. T Ax(H(x)->M(x)) pre
2. T H(s) pre
3. F M(s) conclusion
4. T H(s)->M(s) 1
5. { F H(s) 4
6.   @ 2,5 }
7. { T M(s) 4
8.   @ 7,3 }
"""

FORALL_FALSE = """\
1. T Ax(H(x)->M(x)) pre
2. T Ax H(x) pre
3. F Ax M(x) conclusion
4. F M(a) 3
5. T H(a) 2
6. T H(a)->M(a) 1
7. { F H(a) 6
8.   @ 5,7 }
9. { T M(a) 6
10.  @ 9,4 }
"""

EXISTS_TRUE = """\
1. T Ax(H(x)->M(x)) pre
2. T Ex H(x) pre
3. F Ex M(x) conclusion
4. T H(a) 2
5. F M(a) 3
6. T H(a)->M(a) 1
7. { F H(a) 6
8.   @ 4,7 }
9. { T M(a) 6
10.  @ 5,9 }
"""

EXISTS_FALSE = """\
1. T P(a) pre
2. T Ex P(x)->B pre
3. F B conclusion
4. { F Ex P(x) 2
5.   F P(a) 4
6.   @ 1,5 }
7. { T B 2
8.   @ 7,3 }
"""

TRANSITIVITY = """\
1. T A->B pre
2. T B->C pre
3. T A pre
4. F C conclusion
5. { F A 1
6.   @ 3,5 }
7. { T B 1
8.   { F B 2
9.     @ 7,8 }
10.  { T C 2
11.    @ 4,10 } }
"""

TRANSITIVITY_INCOMPLETE = """\
1. T A->B pre
2. T B->C pre
3. T A pre
4. F C conclusion
5. { F A 1
6.   @ 3,5 }
7. { T B 1 }
"""

COUNTERMODEL_1 = """\
1. T A pre
2. T (A&B)->C pre
3. F C conclusion
4. { F A&B 2
5.   { F A 4
6.     @ 1,5 }
7.   { F B 4 } }
8. { T C 2
9.   @ 3,8 }
"""

COUNTERMODEL_2 = """\
1. T A|B pre
2. F C conclusion
3. { T A 1 }
4. { T B 1 }
"""

NOT_FRESH_ERROR = """\
1. T Ex H(x) pre
2. F Ax M(x) conclusion
3. F M(a) 2
4. T H(a) 1
"""

# the twelve rule-by-rule proofs, each Valid, keyed by the rule they showcase
GOLDEN = {
    "identity": IDENTITY,
    "double-negation": DOUBLE_NEGATION,
    "and-intro": AND_INTRO,
    "and-elim": AND_ELIM,
    "or-elim": OR_ELIM,
    "or-intro": OR_INTRO,
    "implication-true": IMPLICATION_TRUE,
    "implication-false": IMPLICATION_FALSE,
    "forall-true": FORALL_TRUE,
    "forall-false": FORALL_FALSE,
    "exists-true": EXISTS_TRUE,
    "exists-false": EXISTS_FALSE,
}

EXAMPLES = {
    **GOLDEN,
    "transitivity": TRANSITIVITY,
    "transitivity-incomplete": TRANSITIVITY_INCOMPLETE,
    "countermodel-1": COUNTERMODEL_1,
    "countermodel-2": COUNTERMODEL_2,
    "not-fresh": NOT_FRESH_ERROR,
}

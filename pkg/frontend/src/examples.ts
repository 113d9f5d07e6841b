/** Bundled example proofs (same texts the checker's corpus ships). */

export interface Example {
  title: string;
  text: string;
}

export const EXAMPLES: Record<string, Example> = {
  identity: {
    title: "A |- A",
    text: "1. T A pre\n2. F A conclusion\n3. @ 1,2\n",
  },
  transitivity: {
    title: "A->B, B->C, A |- C",
    text: [
      "1. T A->B pre",
      "2. T B->C pre",
      "3. T A pre",
      "4. F C conclusion",
      "5. { F A 1",
      "6.   @ 3,5 }",
      "7. { T B 1",
      "8.   { F B 2",
      "9.     @ 7,8 }",
      "10.  { T C 2",
      "11.    @ 4,10 } }",
    ].join("\n") + "\n",
  },
  "countermodel-1": {
    title: "A, (A&B)->C |/- C",
    text: [
      "1. T A pre",
      "2. T (A&B)->C pre",
      "3. F C conclusion",
      "4. { F A&B 2",
      "5.   { F A 4",
      "6.     @ 1,5 }",
      "7.   { F B 4 } }",
      "8. { T C 2",
      "9.   @ 3,8 }",
    ].join("\n") + "\n",
  },
  "countermodel-2": {
    title: "A|B |/- C",
    text: "1. T A|B pre\n2. F C conclusion\n3. { T A 1 }\n4. { T B 1 }\n",
  },
  "not-fresh": {
    title: "fresh-variable mistake",
    text: "1. T Ex H(x) pre\n2. F Ax M(x) conclusion\n3. F M(a) 2\n4. T H(a) 1\n",
  },
  "forall-true": {
    title: "Ax (H(x)->M(x)), H(s) |- M(s)",
    text: [
      "1. T Ax(H(x)->M(x)) pre",
      "2. T H(s) pre",
      "3. F M(s) conclusion",
      "4. T H(s)->M(s) 1",
      "5. { F H(s) 4",
      "6.   @ 2,5 }",
      "7. { T M(s) 4",
      "8.   @ 7,3 }",
    ].join("\n") + "\n",
  },
};

export function exampleText(id: string): string | null {
  const found = EXAMPLES[id];
  return found ? found.text : null;
}

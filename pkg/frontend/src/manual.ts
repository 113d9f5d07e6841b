/** Rule catalog shown in the Manual panel. */

export interface RuleDoc {
  name: string;
  kind: "alpha" | "beta" | "gamma" | "delta";
  from: string;
  to: string;
  note?: string;
}

export const RULES: RuleDoc[] = [
  { name: "~T", kind: "alpha", from: "T ~X", to: "F X" },
  { name: "~F", kind: "alpha", from: "F ~X", to: "T X" },
  { name: "&T", kind: "alpha", from: "T X&Y", to: "T X and T Y" },
  { name: "|F", kind: "alpha", from: "F X|Y", to: "F X and F Y" },
  { name: "->F", kind: "alpha", from: "F X->Y", to: "T X and F Y" },
  { name: "&F", kind: "beta", from: "F X&Y", to: "branch F X / branch F Y" },
  { name: "|T", kind: "beta", from: "T X|Y", to: "branch T X / branch T Y" },
  { name: "->T", kind: "beta", from: "T X->Y", to: "branch F X / branch T Y" },
  { name: "AT", kind: "gamma", from: "T Ax X", to: "T X[x:=t]", note: "t substitutable for x; reusable" },
  { name: "EF", kind: "gamma", from: "F Ex X", to: "F X[x:=t]", note: "t substitutable for x; reusable" },
  { name: "AF", kind: "delta", from: "F Ax X", to: "F X[x:=a]", note: "a must be a new variable" },
  { name: "ET", kind: "delta", from: "T Ex X", to: "T X[x:=a]", note: "a must be a new variable" },
];

export const SYNTAX_NOTES: string[] = [
  "Atoms start with a capital letter (A, H(x)); variables with a lowercase letter (x, x0).",
  "Connectives: ~ (not), & (and), | (or), -> (implies); quantifiers Ax / Ex bind the variable after the letter.",
  "Precedence, tightest first: ~, quantifiers, &, |, ->; binary connectives associate to the right.",
  "Every proof starts with the premises (T ... pre) followed by one conclusion line (F ... conclusion).",
  "A branching rule opens two sibling blocks delimited by { and }, one per component, both citing the same line.",
  "@ m,n closes a branch: lines m and n carry T and F of the same formula; @ must end its block.",
  "The rule name in a justification is optional: '5. { F A ->T 1' and '5. { F A 1' mean the same.",
];

import { describe, expect, test } from "vitest";

import type { CheckResponse } from "../src/api.js";
import { applyReport, editProof, initialState } from "../src/state.js";
import {
  countermodelText,
  focusLine,
  gutterText,
  renderMessages,
  verdictLabel,
} from "../src/view.js";

function container(): HTMLElement {
  const div = document.createElement("div");
  document.body.append(div);
  return div;
}

describe("renderMessages", () => {
  test("valid banner carries the verbatim verdict", () => {
    const report: CheckResponse = { verdict: "valid", diagnostics: [] };
    const target = container();
    renderMessages(target, applyReport(initialState("p"), report), () => {});
    const banner = target.querySelector(".banner")!;
    expect(banner.textContent).toBe("Valid");
    expect((banner as HTMLElement).dataset.verdict).toBe("valid");
  });

  test("countermodel rendered in v(A)=T style", () => {
    const report: CheckResponse = {
      verdict: "countermodel",
      diagnostics: [],
      countermodel: { C: "F", A: "T" },
    };
    const target = container();
    renderMessages(target, applyReport(initialState("p"), report), () => {});
    expect(target.querySelector(".countermodel")!.textContent).toBe("v(A)=T, v(C)=F");
  });

  test("diagnostics get clickable line links", () => {
    const report: CheckResponse = {
      verdict: "invalid",
      diagnostics: [{ line: 4, code: "NOT_FRESH", message: "a is not new (see line 3)", refs: [3] }],
    };
    const target = container();
    const focused: number[] = [];
    renderMessages(target, applyReport(initialState("p"), report), (line) => focused.push(line));
    const link = target.querySelector<HTMLAnchorElement>(".line-link")!;
    expect(link.textContent).toBe("Line 4");
    expect(link.dataset.line).toBe("4");
    link.click();
    expect(focused).toEqual([4]);
    expect(target.textContent).toContain("NOT_FRESH");
  });

  test("nothing rendered before any check", () => {
    const target = container();
    renderMessages(target, initialState("p"), () => {});
    expect(target.childElementCount).toBe(0);
  });

  test("error banner is shown without a report", () => {
    const target = container();
    const state = { ...initialState("p"), error: "cannot reach the checking service" };
    renderMessages(target, state, () => {});
    expect(target.querySelector(".banner.error")!.textContent).toMatch(/cannot reach/);
  });

  test("editing clears the stale banner on the next render", () => {
    const report: CheckResponse = { verdict: "valid", diagnostics: [] };
    const target = container();
    let state = applyReport(initialState("p"), report);
    renderMessages(target, state, () => {});
    expect(target.querySelector(".banner")).not.toBeNull();
    state = editProof(state, "p2");
    renderMessages(target, state, () => {});
    expect(target.querySelector(".banner")).toBeNull();
  });
});

describe("editor helpers", () => {
  test("gutter counts lines", () => {
    expect(gutterText("a\nb\nc")).toBe("1\n2\n3");
    expect(gutterText("")).toBe("1");
  });

  test("focusLine selects the requested line", () => {
    const editor = document.createElement("textarea");
    document.body.append(editor);
    editor.value = "1. T A pre\n2. F A conclusion\n3. @ 1,2";
    focusLine(editor, 2);
    expect(editor.selectionStart).toBe(11);
    expect(editor.selectionEnd).toBe(11 + "2. F A conclusion".length);
  });

  test("verdict labels cover the schema", () => {
    for (const verdict of ["valid", "countermodel", "incomplete", "invalid", "parse_error"]) {
      expect(verdictLabel(verdict)).not.toBe("");
    }
    expect(verdictLabel("weird")).toBe("weird");
  });
});

import { describe, expect, test } from "vitest";

import type { CheckResponse } from "../src/api.js";
import {
  applyError,
  applyLatex,
  applyReport,
  editProof,
  initialState,
  startRequest,
} from "../src/state.js";

const VALID: CheckResponse = { verdict: "valid", diagnostics: [] };

describe("state transitions", () => {
  test("editing clears a stale report and latex", () => {
    let state = applyReport(initialState("1. T A pre"), VALID);
    state = applyLatex(state, "\\Tree [.{} ]");
    state = editProof(state, "1. T B pre");
    expect(state.lastReport).toBeNull();
    expect(state.latexSource).toBeNull();
    expect(state.proofText).toBe("1. T B pre");
  });

  test("identical text is not an edit", () => {
    const checked = applyReport(initialState("x"), VALID);
    expect(editProof(checked, "x")).toBe(checked);
  });

  test("requests set and clear busy", () => {
    let state = startRequest(initialState("x"));
    expect(state.busy).toBe(true);
    state = applyReport(state, VALID);
    expect(state.busy).toBe(false);
    expect(state.lastReport).toEqual(VALID);
  });

  test("network errors keep the editor content", () => {
    const before = startRequest(editProof(initialState(), "1. T A pre"));
    const after = applyError(before, "cannot reach the checking service");
    expect(after.proofText).toBe("1. T A pre");
    expect(after.error).toMatch(/cannot reach/);
    expect(after.busy).toBe(false);
  });

  test("a fresh report replaces an error banner", () => {
    const failed = applyError(startRequest(initialState("x")), "boom");
    const after = applyReport(failed, VALID);
    expect(after.error).toBeNull();
  });
});

/** UI state and its pure transitions; a report never outlives the text it was computed for. */

import type { CheckResponse } from "./api.js";

export interface UiState {
  proofText: string;
  lastReport: CheckResponse | null;
  latexSource: string | null;
  busy: boolean;
  error: string | null;
}

export function initialState(proofText = ""): UiState {
  return { proofText, lastReport: null, latexSource: null, busy: false, error: null };
}

/** Any edit invalidates the previous verdict and LaTeX view. */
export function editProof(state: UiState, text: string): UiState {
  if (text === state.proofText) {
    return state;
  }
  return { ...state, proofText: text, lastReport: null, latexSource: null, error: null };
}

export function startRequest(state: UiState): UiState {
  return { ...state, busy: true, error: null };
}

export function applyReport(state: UiState, report: CheckResponse): UiState {
  return { ...state, busy: false, lastReport: report, error: null };
}

export function applyLatex(state: UiState, latex: string): UiState {
  return { ...state, busy: false, latexSource: latex, error: null };
}

/** Network failures keep the editor content and the banner is non-blocking. */
export function applyError(state: UiState, message: string): UiState {
  return { ...state, busy: false, error: message };
}

/** DOM rendering: verdict banner, diagnostics with line focus, countermodel, gutter. */

import type { CheckResponse, DiagnosticDto } from "./api.js";
import type { UiState } from "./state.js";

const VERDICT_LABELS: Record<string, string> = {
  valid: "Valid",
  countermodel: "Countermodel",
  incomplete: "Incomplete",
  invalid: "Invalid",
  parse_error: "Parse error",
};

export function verdictLabel(verdict: string): string {
  return VERDICT_LABELS[verdict] ?? verdict;
}

export function countermodelText(model: Record<string, string>): string {
  return Object.keys(model)
    .sort()
    .map((atom) => `v(${atom})=${model[atom]}`)
    .join(", ");
}

export function gutterText(proofText: string): string {
  const count = Math.max(1, proofText.split("\n").length);
  return Array.from({ length: count }, (_, i) => String(i + 1)).join("\n");
}

/** Move the caret to the start of a 1-based editor line and reveal it. */
export function focusLine(editor: HTMLTextAreaElement, line: number): void {
  const lines = editor.value.split("\n");
  const index = Math.min(Math.max(line, 1), lines.length);
  let offset = 0;
  for (let i = 0; i < index - 1; i += 1) {
    offset += (lines[i] ?? "").length + 1;
  }
  const end = offset + (lines[index - 1] ?? "").length;
  editor.focus();
  editor.setSelectionRange(offset, end);
  const lineHeight = 18;
  editor.scrollTop = Math.max(0, (index - 3) * lineHeight);
}

function diagnosticItem(
  doc: Document,
  diag: DiagnosticDto,
  onFocus: (line: number) => void,
): HTMLLIElement {
  const item = doc.createElement("li");
  item.className = "diagnostic";
  const link = doc.createElement("a");
  link.href = "#";
  link.className = "line-link";
  link.dataset.line = String(diag.line);
  link.textContent = `Line ${diag.line}`;
  link.addEventListener("click", (event) => {
    event.preventDefault();
    onFocus(diag.line);
  });
  item.append(link, doc.createTextNode(`: [${diag.code}] ${diag.message}`));
  return item;
}

export function renderMessages(
  container: HTMLElement,
  state: UiState,
  onFocus: (line: number) => void,
): void {
  const doc = container.ownerDocument;
  container.replaceChildren();

  if (state.error !== null) {
    const banner = doc.createElement("div");
    banner.className = "banner error";
    banner.textContent = state.error;
    container.append(banner);
    return;
  }
  if (state.busy) {
    const banner = doc.createElement("div");
    banner.className = "banner busy";
    banner.textContent = "Checking…";
    container.append(banner);
    return;
  }
  const report = state.lastReport;
  if (report === null) {
    return;
  }

  const banner = doc.createElement("div");
  banner.className = `banner verdict-${report.verdict}`;
  banner.dataset.verdict = report.verdict;
  banner.textContent = verdictLabel(report.verdict);
  container.append(banner);

  if (report.countermodel) {
    const model = doc.createElement("p");
    model.className = "countermodel";
    model.textContent = countermodelText(report.countermodel);
    container.append(model);
  }

  if (report.diagnostics.length > 0) {
    const list = doc.createElement("ul");
    list.className = "diagnostics";
    for (const diag of report.diagnostics) {
      list.append(diagnosticItem(doc, diag, onFocus));
    }
    container.append(list);
  }

  if (report.verdict === "incomplete") {
    const note = doc.createElement("p");
    note.className = "open-branches";
    note.textContent = "The proof parses and breaks no rule, but open branches remain.";
    container.append(note);
  }
}

export function renderLatexPanel(
  panel: HTMLElement,
  source: HTMLElement,
  overleafInput: HTMLTextAreaElement | HTMLInputElement,
  state: UiState,
): void {
  if (state.latexSource === null) {
    panel.hidden = true;
    source.textContent = "";
    overleafInput.value = "";
    return;
  }
  panel.hidden = false;
  source.textContent = state.latexSource;
  overleafInput.value = state.latexSource;
}

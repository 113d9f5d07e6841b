/** Wires editor, actions and panels together inside a container element. */

import { ApiClient, ApiError, type FetchLike } from "./api.js";
import { EXAMPLES, exampleText } from "./examples.js";
import { RULES, SYNTAX_NOTES } from "./manual.js";
import {
  applyError,
  applyLatex,
  applyReport,
  editProof,
  initialState,
  startRequest,
  type UiState,
} from "./state.js";
import { focusLine, gutterText, renderLatexPanel, renderMessages } from "./view.js";

export interface AppOptions {
  baseUrl: string;
  fetchImpl: FetchLike;
}

export interface AppHandle {
  state(): UiState;
  editor: HTMLTextAreaElement;
  messages: HTMLElement;
  check(): Promise<void>;
  latex(): Promise<void>;
  loadExample(id: string): void;
  setProofText(text: string): void;
}

const OVERLEAF_URL = "https://www.overleaf.com/docs";

export function createApp(root: HTMLElement, options: AppOptions): AppHandle {
  const doc = root.ownerDocument;
  const api = new ApiClient(options.baseUrl, options.fetchImpl);
  let state = initialState();

  root.innerHTML = `
    <header class="toolbar">
      <strong class="brand">anita</strong>
      <label>Example
        <select class="example-select">
          <option value="">choose…</option>
        </select>
      </label>
      <button type="button" class="check-button">Check</button>
      <button type="button" class="latex-button">LaTeX</button>
      <button type="button" class="manual-button">Manual</button>
    </header>
    <div class="editor-wrap">
      <pre class="gutter">1</pre>
      <textarea class="proof-editor" spellcheck="false"
        placeholder="1. T A pre&#10;2. F A conclusion&#10;3. @ 1,2"></textarea>
    </div>
    <section class="messages" aria-live="polite"></section>
    <section class="latex-panel" hidden>
      <h2>LaTeX (qtree)</h2>
      <pre class="latex-source"></pre>
      <button type="button" class="copy-button">Copy</button>
      <form class="overleaf-form" method="post" target="_blank" action="${OVERLEAF_URL}">
        <textarea name="snip" hidden></textarea>
        <button type="submit" class="overleaf-button">Open in Overleaf</button>
      </form>
    </section>
    <section class="manual-panel" hidden>
      <h2>Rules</h2>
      <table class="rule-table">
        <thead><tr><th>rule</th><th>from</th><th>derive</th><th>note</th></tr></thead>
        <tbody></tbody>
      </table>
      <h2>Writing proofs</h2>
      <ul class="syntax-notes"></ul>
    </section>
  `;

  const editor = root.querySelector(".proof-editor") as HTMLTextAreaElement;
  const gutter = root.querySelector(".gutter") as HTMLPreElement;
  const messages = root.querySelector(".messages") as HTMLElement;
  const latexPanel = root.querySelector(".latex-panel") as HTMLElement;
  const latexSource = root.querySelector(".latex-source") as HTMLElement;
  const overleafInput = root.querySelector(".overleaf-form textarea") as HTMLTextAreaElement;
  const manualPanel = root.querySelector(".manual-panel") as HTMLElement;
  const exampleSelect = root.querySelector(".example-select") as HTMLSelectElement;

  for (const [id, example] of Object.entries(EXAMPLES)) {
    const option = doc.createElement("option");
    option.value = id;
    option.textContent = `${id} — ${example.title}`;
    exampleSelect.append(option);
  }

  const ruleBody = root.querySelector(".rule-table tbody") as HTMLElement;
  for (const rule of RULES) {
    const row = doc.createElement("tr");
    for (const cell of [rule.name, rule.from, rule.to, rule.note ?? ""]) {
      const td = doc.createElement("td");
      td.textContent = cell;
      row.append(td);
    }
    ruleBody.append(row);
  }
  const notes = root.querySelector(".syntax-notes") as HTMLElement;
  for (const note of SYNTAX_NOTES) {
    const item = doc.createElement("li");
    item.textContent = note;
    notes.append(item);
  }

  function render(): void {
    if (editor.value !== state.proofText) {
      editor.value = state.proofText;
    }
    gutter.textContent = gutterText(state.proofText);
    renderMessages(messages, state, (line) => focusLine(editor, line));
    renderLatexPanel(latexPanel, latexSource, overleafInput, state);
  }

  function setState(next: UiState): void {
    state = next;
    render();
  }

  editor.addEventListener("input", () => {
    setState(editProof(state, editor.value));
  });
  editor.addEventListener("scroll", () => {
    gutter.scrollTop = editor.scrollTop;
  });

  async function check(): Promise<void> {
    if (state.busy) {
      return; // one in-flight request at a time
    }
    setState(startRequest(state));
    const checked = state.proofText;
    try {
      const report = await api.check(checked);
      if (state.proofText !== checked) {
        setState({ ...state, busy: false }); // edited while waiting: the report is stale
        return;
      }
      setState(applyReport(state, report));
    } catch (err) {
      const message = err instanceof ApiError ? err.message : String(err);
      setState(applyError(state, message));
    }
  }

  async function latex(): Promise<void> {
    if (state.busy) {
      return;
    }
    setState(startRequest(state));
    try {
      const result = await api.latex(state.proofText);
      if (result.ok) {
        setState(applyLatex(state, result.latex));
      } else {
        setState(applyReport(state, result.report));
      }
    } catch (err) {
      const message = err instanceof ApiError ? err.message : String(err);
      setState(applyError(state, message));
    }
  }

  function loadExample(id: string): void {
    const text = exampleText(id);
    if (text === null) {
      return;
    }
    setState(editProof(state, text));
  }

  function setProofText(text: string): void {
    setState(editProof(state, text));
  }

  (root.querySelector(".check-button") as HTMLButtonElement)
    .addEventListener("click", () => void check());
  (root.querySelector(".latex-button") as HTMLButtonElement)
    .addEventListener("click", () => void latex());
  (root.querySelector(".manual-button") as HTMLButtonElement)
    .addEventListener("click", () => {
      manualPanel.hidden = !manualPanel.hidden;
    });
  (root.querySelector(".copy-button") as HTMLButtonElement)
    .addEventListener("click", () => {
      const text = state.latexSource ?? "";
      void doc.defaultView?.navigator?.clipboard?.writeText(text);
    });
  exampleSelect.addEventListener("change", () => {
    if (exampleSelect.value) {
      loadExample(exampleSelect.value);
    }
  });

  render();
  return { state: () => state, editor, messages, check, latex, loadExample, setProofText };
}

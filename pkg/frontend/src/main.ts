/**
 * DOM wiring for the session screen and the table explorer.
 *
 * Every mutation waits for the server's response before re-rendering
 * (no optimistic updates), so the page always shows server state. The
 * active session id lives in the URL fragment; reloading re-hydrates
 * via GET.
 */

import { ApiClient, ApiError, SessionView } from "./api.js";
import { drawCurve, drawTrajectory } from "./chart.js";
import { errorBanner, sessionPanel, tableCsv, tableGrid, verbatim } from "./views.js";

const api = new ApiClient();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function numberInput(id: string): number {
  return Number(el<HTMLInputElement>(id).value);
}

let session: SessionView | null = null;

function showError(target: HTMLElement, err: unknown): void {
  if (err instanceof ApiError) {
    target.innerHTML = errorBanner(err.kind, err.message);
  } else {
    target.innerHTML = errorBanner("Error", String(err));
  }
}

function clearError(target: HTMLElement): void {
  target.innerHTML = "";
}

async function renderSession(view: SessionView): Promise<void> {
  session = view;
  window.location.hash = view.id;
  el("session-panel").innerHTML = sessionPanel(view);
  el<HTMLButtonElement>("btn-positive").disabled = false;
  el<HTMLButtonElement>("btn-negative").disabled = false;
  el<HTMLButtonElement>("btn-undo").disabled = view.results.length === 0;
  drawTrajectory(el<HTMLCanvasElement>("trajectory-chart"), view.trajectory, view.target);
  await renderCurvePanel(view);
  await refreshTable();
}

async function renderCurvePanel(view: SessionView): Promise<void> {
  const curveErr = el("curve-error");
  clearError(curveErr);
  try {
    const curve = await api.curve({ ...view.test, kind: "ppv", points: 200 });
    let phiE: number | null = null;
    let label = "threshold undefined (sensitivity + specificity = 1)";
    try {
      const threshold = await api.threshold(view.test);
      phiE = threshold.phi_e;
      label = `prevalence threshold ${verbatim(threshold.phi_e)} (epsilon ${verbatim(threshold.epsilon)})`;
    } catch (err) {
      if (!(err instanceof ApiError && err.kind === "EpsilonOne")) throw err;
    }
    el("threshold-label").textContent = label;
    drawCurve(
      el<HTMLCanvasElement>("curve-chart"),
      curve.points,
      phiE,
      view.target,
      view.posterior,
    );
  } catch (err) {
    showError(curveErr, err);
  }
}

async function refreshTable(): Promise<void> {
  const tableErr = el("table-error");
  clearError(tableErr);
  const target = Number(el<HTMLSelectElement>("table-target").value);
  try {
    const table = await api.table(target);
    let highlight = null;
    if (session !== null && session.target !== null) {
      // ask the server for the session's ln LR+ at the current posterior
      const plan = await api.iterations({
        ...session.test,
        prev: session.posterior,
        target: session.target,
      });
      if (plan.log_lr !== null) {
        highlight = { logLr: plan.log_lr, phi: session.posterior };
      }
    }
    el("table-panel").innerHTML = tableGrid(table, highlight);
    el<HTMLButtonElement>("btn-download").onclick = () => {
      const blob = new Blob([tableCsv(table)], { type: "text/csv" });
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = `iterations_target_${table.target_rho}.csv`;
      link.click();
      URL.revokeObjectURL(link.href);
    };
  } catch (err) {
    showError(tableErr, err);
  }
}

async function startSession(event: Event): Promise<void> {
  event.preventDefault();
  const formErr = el("form-error");
  clearError(formErr);
  const targetRaw = el<HTMLSelectElement>("target").value;
  try {
    const view = await api.createSession({
      sens: numberInput("sens"),
      spec: numberInput("spec"),
      prev: numberInput("prev"),
      target: targetRaw === "" ? null : Number(targetRaw),
    });
    await renderSession(view);
  } catch (err) {
    showError(formErr, err);
  }
}

async function recordResult(result: "+" | "-"): Promise<void> {
  if (!session) return;
  const panelErr = el("session-error");
  clearError(panelErr);
  try {
    await renderSession(await api.postResult(session.id, result));
  } catch (err) {
    showError(panelErr, err);
  }
}

async function undo(): Promise<void> {
  if (!session) return;
  const panelErr = el("session-error");
  clearError(panelErr);
  try {
    await renderSession(await api.undoResult(session.id));
  } catch (err) {
    showError(panelErr, err);
  }
}

async function rehydrateFromHash(): Promise<void> {
  const id = window.location.hash.replace(/^#/, "");
  if (!id) return;
  try {
    await renderSession(await api.getSession(id));
  } catch {
    window.location.hash = "";
  }
}

export function wire(): void {
  el<HTMLFormElement>("setup-form").addEventListener("submit", (e) => void startSession(e));
  el("btn-positive").addEventListener("click", () => void recordResult("+"));
  el("btn-negative").addEventListener("click", () => void recordResult("-"));
  el("btn-undo").addEventListener("click", () => void undo());
  el("table-target").addEventListener("change", () => void refreshTable());
  el("btn-refresh-table").addEventListener("click", () => void refreshTable());
  void refreshTable();
  void rehydrateFromHash();
}

wire();

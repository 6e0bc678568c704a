/**
 * Pure HTML-string renderers for the session screen and table explorer.
 *
 * All numeric text comes through {@link verbatim}, which stringifies the
 * exact values received from the API: the UI shows what the server
 * computed, full stop. These functions have no DOM or network
 * dependencies so tests can assert on their output directly.
 */

import type { RemainingPlan, SessionView, TableResponse } from "./api.js";

/** Render a server-provided number exactly as JSON parsed it. */
export function verbatim(value: number): string {
  return String(value);
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function remainingBadge(remaining: RemainingPlan | null): string {
  if (remaining === null) {
    return `<span class="badge badge-muted">no target set</span>`;
  }
  switch (remaining.status) {
    case "Planned":
      return (
        `<span class="badge badge-plan">` +
        `${remaining.n_i === null ? "?" : verbatim(remaining.n_i)} more positive` +
        `${remaining.n_i === 1 ? "" : "s"} to target</span>`
      );
    case "AlreadyMet":
      return `<span class="badge badge-met">target met</span>`;
    case "NonInformativeTest":
      return `<span class="badge badge-warn">non-informative test</span>`;
    case "InfeasibleTarget":
      return `<span class="badge badge-warn">target unreachable</span>`;
  }
}

export function trajectoryList(trajectory: number[]): string {
  const items = trajectory
    .map(
      (value, index) =>
        `<li><span class="step">${index === 0 ? "prior" : `after ${index}`}</span>` +
        `<span class="value">${verbatim(value)}</span></li>`,
    )
    .join("");
  return `<ol class="trajectory" start="0">${items}</ol>`;
}

export function resultChips(results: string[]): string {
  if (results.length === 0) {
    return `<p class="muted">no results recorded yet</p>`;
  }
  const chips = results
    .map((r) => `<span class="chip chip-${r}">${r === "positive" ? "+" : "−"}</span>`)
    .join("");
  return `<p class="chips">${chips}</p>`;
}

export function sessionPanel(view: SessionView): string {
  return (
    `<div class="session" data-session-id="${escapeHtml(view.id)}">` +
    `<p>posterior <strong class="posterior">${verbatim(view.posterior)}</strong>` +
    (view.target === null ? "" : ` &middot; target <span class="target">${verbatim(view.target)}</span>`) +
    ` ${remainingBadge(view.remaining)}</p>` +
    resultChips(view.results) +
    trajectoryList(view.trajectory) +
    `</div>`
  );
}

export function errorBanner(kind: string, message: string): string {
  return `<div class="error"><strong>${escapeHtml(kind)}</strong>: ${escapeHtml(message)}</div>`;
}

/**
 * Index of the axis value closest to a target. Pure selection over
 * server-provided axis values; used only to decide which cell to
 * highlight, never to display a number.
 */
export function nearestIndex(values: number[], target: number): number {
  let best = 0;
  for (let i = 1; i < values.length; i++) {
    if (Math.abs(values[i] - target) < Math.abs(values[best] - target)) {
      best = i;
    }
  }
  return best;
}

export interface TableHighlight {
  logLr: number;
  phi: number;
}

export function tableGrid(table: TableResponse, highlight: TableHighlight | null): string {
  const hi =
    highlight === null
      ? null
      : {
          row: nearestIndex(table.log_lr_values, highlight.logLr),
          col: nearestIndex(table.phi_values, highlight.phi),
        };
  const head =
    `<tr><th>ln LR+ \\ phi</th>` +
    table.phi_values.map((phi) => `<th>${verbatim(phi)}</th>`).join("") +
    `</tr>`;
  const body = table.cells_display
    .map((row, i) => {
      const cells = row
        .map((text, j) => {
          const current = hi !== null && hi.row === i && hi.col === j;
          return `<td class="cell${current ? " current" : ""}" title="ceil: ${verbatim(
            table.cells_ceiled[i][j],
          )}">${escapeHtml(text)}</td>`;
        })
        .join("");
      return `<tr><th>${verbatim(table.log_lr_values[i])}</th>${cells}</tr>`;
    })
    .join("");
  return `<table class="grid"><thead>${head}</thead><tbody>${body}</tbody></table>`;
}

/** CSV of the displayed grid, assembled from server-rendered strings. */
export function tableCsv(table: TableResponse): string {
  const header = ["ln_lr_plus", ...table.phi_values.map(verbatim)].join(",");
  const rows = table.cells_display.map((row, i) =>
    [verbatim(table.log_lr_values[i]), ...row].join(","),
  );
  return [header, ...rows].join("\n") + "\n";
}

/** Table-explorer rendering tests against the recorded target-0.99 grid. */

import { describe, expect, it } from "vitest";

import type { TableResponse } from "../src/api";
import { nearestIndex, tableCsv, tableGrid } from "../src/views";
import { fixtures } from "./fixtures";

const table = fixtures.table99 as unknown as TableResponse;

describe("table explorer", () => {
  it("renders the target-0.99 grid with 16.97 in the top-left cell", () => {
    const html = tableGrid(table, null);
    const firstCell = html.match(/<td class="cell"[^>]*>([^<]+)<\/td>/);
    expect(firstCell?.[1]).toBe("16.97");
    // header row plus 10 body rows, 6 data cells per body row
    expect(html.match(/<tr><th>/g)).toHaveLength(11);
    expect(html.match(/<td/g)).toHaveLength(60);
  });

  it("cell text is exactly the server's display strings", () => {
    const html = tableGrid(table, null);
    for (const row of table.cells_display) {
      for (const text of row) {
        expect(html).toContain(`>${text}</td>`);
      }
    }
  });

  it("highlights the user's current cell", () => {
    // session at ln LR+ ~ 1.67, posterior ~ 0.1: row 1.5, column 0.1
    const html = tableGrid(table, { logLr: 1.6740, phi: 0.1 });
    const row = table.log_lr_values.indexOf(1.5);
    const col = table.phi_values.indexOf(0.1);
    const highlighted = [...html.matchAll(/<td class="cell current"[^>]*>([^<]+)<\/td>/g)];
    expect(highlighted).toHaveLength(1);
    expect(highlighted[0][1]).toBe(table.cells_display[row][col]);
  });

  it("rows decrease left to right on the displayed grid", () => {
    for (const row of table.cells) {
      for (let j = 1; j < row.length; j++) {
        expect(row[j]).toBeLessThanOrEqual(row[j - 1]);
      }
    }
  });

  it("nearest-index selection picks the closest axis value", () => {
    expect(nearestIndex([0.5, 1.0, 1.5, 2.0], 1.6)).toBe(2);
    expect(nearestIndex([0.02, 0.05, 0.07, 0.1, 0.15, 0.2], 0.09)).toBe(3);
    expect(nearestIndex([0.5], 42)).toBe(0);
  });

  it("CSV download is assembled from server strings only", () => {
    const csv = tableCsv(table);
    const lines = csv.trimEnd().split("\n");
    expect(lines[0]).toBe("ln_lr_plus,0.02,0.05,0.07,0.1,0.15,0.2");
    expect(lines[1]).toBe("0.5," + table.cells_display[0].join(","));
    expect(lines).toHaveLength(11);
  });
});

/**
 * Canvas drawing for the posterior trajectory and the PPV curve panel.
 *
 * Values are mapped to pixels for geometry only; no probabilities are
 * computed here. Axis extremes are the fixed [0, 1] probability range.
 */

const PAD = 24;

function plotArea(canvas: HTMLCanvasElement) {
  return {
    left: PAD,
    top: 8,
    width: canvas.width - PAD - 8,
    height: canvas.height - PAD - 8,
  };
}

function clear(canvas: HTMLCanvasElement): CanvasRenderingContext2D | null {
  const ctx = canvas.getContext("2d");
  if (!ctx) return null;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const { left, top, width, height } = plotArea(canvas);
  ctx.strokeStyle = "#999";
  ctx.lineWidth = 1;
  ctx.strokeRect(left, top, width, height);
  ctx.fillStyle = "#666";
  ctx.font = "10px sans-serif";
  ctx.fillText("1", 8, top + 10);
  ctx.fillText("0", 8, top + height);
  return ctx;
}

function yPixel(canvas: HTMLCanvasElement, value: number): number {
  const { top, height } = plotArea(canvas);
  return top + (1 - value) * height;
}

/** Step plot of posteriors over result index, with optional target line. */
export function drawTrajectory(
  canvas: HTMLCanvasElement,
  trajectory: number[],
  target: number | null,
): void {
  const ctx = clear(canvas);
  if (!ctx) return;
  const { left, width } = plotArea(canvas);
  const stepWidth = width / Math.max(1, trajectory.length);

  if (target !== null) {
    ctx.strokeStyle = "#c0392b";
    ctx.setLineDash([4, 3]);
    ctx.beginPath();
    ctx.moveTo(left, yPixel(canvas, target));
    ctx.lineTo(left + width, yPixel(canvas, target));
    ctx.stroke();
    ctx.setLineDash([]);
  }

  ctx.strokeStyle = "#2b6cb0";
  ctx.lineWidth = 2;
  ctx.beginPath();
  trajectory.forEach((value, index) => {
    const x0 = left + index * stepWidth;
    const y = yPixel(canvas, value);
    if (index === 0) ctx.moveTo(x0, y);
    else ctx.lineTo(x0, y);
    ctx.lineTo(x0 + stepWidth, y);
  });
  ctx.stroke();
}

/** PPV curve with the prevalence-threshold marker and target line. */
export function drawCurve(
  canvas: HTMLCanvasElement,
  points: [number, number][],
  phiE: number | null,
  target: number | null,
  prior: number | null,
): void {
  const ctx = clear(canvas);
  if (!ctx) return;
  const { left, width } = plotArea(canvas);
  const xPixel = (phi: number) => left + phi * width;

  if (target !== null) {
    ctx.strokeStyle = "#c0392b";
    ctx.setLineDash([4, 3]);
    ctx.beginPath();
    ctx.moveTo(left, yPixel(canvas, target));
    ctx.lineTo(left + width, yPixel(canvas, target));
    ctx.stroke();
    ctx.setLineDash([]);
  }

  if (phiE !== null) {
    ctx.strokeStyle = "#8e44ad";
    ctx.setLineDash([2, 2]);
    ctx.beginPath();
    ctx.moveTo(xPixel(phiE), yPixel(canvas, 0));
    ctx.lineTo(xPixel(phiE), yPixel(canvas, 1));
    ctx.stroke();
    ctx.setLineDash([]);
  }

  ctx.strokeStyle = "#2b6cb0";
  ctx.lineWidth = 2;
  ctx.beginPath();
  points.forEach(([phi, rho], index) => {
    if (index === 0) ctx.moveTo(xPixel(phi), yPixel(canvas, rho));
    else ctx.lineTo(xPixel(phi), yPixel(canvas, rho));
  });
  ctx.stroke();

  if (prior !== null) {
    ctx.fillStyle = "#2b6cb0";
    ctx.beginPath();
    ctx.arc(xPixel(prior), yPixel(canvas, 0), 4, 0, 2 * Math.PI);
    ctx.fill();
  }
}

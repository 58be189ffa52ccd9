/** Bar chart of the 121-margin conditional distribution with the
 * covering region highlighted. Geometry is computed separately from
 * rendering so it can be tested without a DOM. */

export interface Bar {
  margin: number;
  probability: number;
  covering: boolean;
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface ChartGeometry {
  bars: Bar[];
  width: number;
  height: number;
}

/** Covering requires margin > -line strictly; margin = -line is a push. */
export function isCoveringMargin(margin: number, bookSpread: number): boolean {
  return margin > -bookSpread;
}

export function computeBars(
  margins: number[],
  probabilities: number[],
  bookSpread: number | null,
  width = 840,
  height = 220,
): ChartGeometry {
  if (margins.length !== probabilities.length) {
    throw new Error(`margins (${margins.length}) and probabilities (${probabilities.length}) differ`);
  }
  const n = margins.length;
  const maxProb = Math.max(...probabilities, 1e-12);
  const slot = width / n;
  const barWidth = Math.max(slot - 1, 0.5);
  const bars = margins.map((margin, i) => {
    const h = (probabilities[i] / maxProb) * (height - 4);
    return {
      margin,
      probability: probabilities[i],
      covering: bookSpread !== null && isCoveringMargin(margin, bookSpread),
      x: i * slot,
      y: height - h,
      width: barWidth,
      height: h,
    };
  });
  return { bars, width, height };
}

export function renderChartSvg(geometry: ChartGeometry): string {
  const rects = geometry.bars
    .map(
      (bar) =>
        `<rect class="${bar.covering ? "bar covering" : "bar"}" x="${bar.x.toFixed(2)}" ` +
        `y="${bar.y.toFixed(2)}" width="${bar.width.toFixed(2)}" height="${bar.height.toFixed(2)}">` +
        `<title>margin ${bar.margin}: ${(100 * bar.probability).toFixed(2)}%</title></rect>`,
    )
    .join("");
  return (
    `<svg viewBox="0 0 ${geometry.width} ${geometry.height}" ` +
    `preserveAspectRatio="none" role="img" aria-label="conditional margin distribution">${rects}</svg>`
  );
}

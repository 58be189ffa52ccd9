/** Display formatting and the local odds-format conversion for the
 * format switcher. All probability math stays server-side; the only
 * arithmetic here is presentation (percent rounding) and the odds
 * display conversion mirroring the server's converter. */

import type { OddsFormat } from "./api.js";

export function formatPercent(p: number): string {
  return `${(100 * p).toFixed(1)}%`;
}

export function formatSignedPercent(p: number): string {
  const pct = 100 * p;
  const text = pct.toFixed(1);
  return pct >= 0 ? `+${text}%` : `${text}%`;
}

export function americanToDecimal(value: number): number {
  return value > 0 ? 1 + value / 100 : 1 + 100 / Math.abs(value);
}

export function decimalToAmerican(value: number): number {
  return value >= 2 ? (value - 1) * 100 : -100 / (value - 1);
}

/** Convert the displayed odds value when the user flips the format
 * selector; the submitted payload always carries the raw field. */
export function convertOddsDisplay(value: number, from: OddsFormat, to: OddsFormat): number {
  if (from === to) return value;
  return to === "decimal" ? americanToDecimal(value) : decimalToAmerican(value);
}

export function formatOddsValue(value: number, format: OddsFormat): string {
  if (format === "decimal") {
    return (Math.round(value * 1000) / 1000).toString();
  }
  const rounded = Math.round(value * 2) / 2;
  return rounded > 0 ? `+${rounded}` : `${rounded}`;
}

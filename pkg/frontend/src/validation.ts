/** Client-side parsing of the four form fields. Range rules beyond basic
 * format validity (like the +/-39 projection limit) stay server-side. */

import type { EdgeRequest, OddsFormat } from "./api.js";

export interface FormFields {
  projectedSpread: string;
  sportsbookSpread: string;
  oddsFormat: OddsFormat;
  odds: string;
}

export type FieldName = "projected_spread" | "book_spread" | "odds" | "odds_format";

export interface ValidationResult {
  request: EdgeRequest | null;
  errors: Partial<Record<FieldName, string>>;
}

const NUMBER_RE = /^[+-]?(\d+(\.\d*)?|\.\d+)$/;

export function parseNumber(text: string): number | null {
  const trimmed = text.trim();
  if (!NUMBER_RE.test(trimmed)) return null;
  const value = Number(trimmed);
  return Number.isFinite(value) ? value : null;
}

export function parseSpread(text: string): number | null {
  return parseNumber(text);
}

export function parseOdds(text: string, format: OddsFormat): number | null {
  const value = parseNumber(text);
  if (value === null) return null;
  if (format === "american" && Math.abs(value) < 100) return null;
  if (format === "decimal" && value <= 1) return null;
  return value;
}

export function validateForm(fields: FormFields): ValidationResult {
  const errors: ValidationResult["errors"] = {};
  const projected = parseSpread(fields.projectedSpread);
  if (projected === null) errors.projected_spread = "enter a spread like -3 or 7.5";
  const book = parseSpread(fields.sportsbookSpread);
  if (book === null) errors.book_spread = "enter the sportsbook spread";
  if (fields.oddsFormat !== "american" && fields.oddsFormat !== "decimal") {
    errors.odds_format = "choose American or decimal";
  }
  const odds = parseOdds(fields.odds, fields.oddsFormat);
  if (odds === null) {
    errors.odds =
      fields.oddsFormat === "american"
        ? "American odds need magnitude of at least 100"
        : "decimal odds must be greater than 1";
  }
  if (Object.keys(errors).length > 0) return { request: null, errors };
  return {
    request: {
      projected_spread: projected as number,
      book_spread: book as number,
      odds: odds as number,
      odds_format: fields.oddsFormat,
    },
    errors: {},
  };
}

export function formIsComplete(fields: FormFields): boolean {
  return validateForm(fields).request !== null;
}

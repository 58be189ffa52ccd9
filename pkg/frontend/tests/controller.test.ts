import { describe, expect, it } from "vitest";

import { ApiError, EdgeApiClient, EdgeResponse } from "../src/api.js";
import { FormController, buildResultView, debounce } from "../src/controller.js";
import { FormFields } from "../src/validation.js";

const MODEL = { cell_sd: 15, ref_sigma: 22, weights_version: "boyd-1980-2014" };

function response(edge: number, cover = 0.5318, breakEven = 0.5238): EdgeResponse {
  return {
    cover_probability: cover,
    push_probability: 0,
    break_even_probability: breakEven,
    edge,
    ev_per_unit: edge * 1.909,
    model: MODEL,
  };
}

const GOOD: FormFields = {
  projectedSpread: "-2.9",
  sportsbookSpread: "-2.5",
  oddsFormat: "american",
  odds: "-110",
};

function stubClient(handler: () => Promise<EdgeResponse>): EdgeApiClient {
  return { postEdge: handler } as unknown as EdgeApiClient;
}

describe("buildResultView", () => {
  it("formats the paper example as +0.8%", () => {
    const view = buildResultView(response(0.008), 1);
    expect(view.edgeText).toBe("+0.8%");
    expect(view.edgePositive).toBe(true);
    expect(view.coverText).toBe("53.2%");
    expect(view.breakEvenText).toBe("52.4%");
  });

  it("checks displayed edge against cover minus break-even", () => {
    expect(buildResultView(response(0.008), 1).consistent).toBe(true);
    // server edge disagreeing with its own probabilities is flagged
    expect(buildResultView(response(0.05), 1).consistent).toBe(false);
  });

  it("colors negative edges", () => {
    const view = buildResultView(response(-0.004, 0.5198), 1);
    expect(view.edgeText).toBe("-0.4%");
    expect(view.edgePositive).toBe(false);
  });
});

describe("FormController.submit", () => {
  it("returns the rendered result for a valid form", async () => {
    const controller = new FormController(stubClient(async () => response(0.008)));
    const outcome = await controller.submit(GOOD);
    expect(outcome.kind).toBe("result");
    if (outcome.kind === "result") expect(outcome.view.edgeText).toBe("+0.8%");
  });

  it("short-circuits on unparseable fields without calling the API", async () => {
    let called = 0;
    const controller = new FormController(
      stubClient(async () => {
        called++;
        return response(0.008);
      }),
    );
    const outcome = await controller.submit({ ...GOOD, sportsbookSpread: "x" });
    expect(outcome.kind).toBe("fieldErrors");
    expect(called).toBe(0);
  });

  it("maps 422 to an out-of-model message", async () => {
    const controller = new FormController(
      stubClient(async () => {
        throw new ApiError(422, "projected spread -45.0 is outside the modeled +/-39 range");
      }),
    );
    const outcome = await controller.submit({ ...GOOD, projectedSpread: "-45" });
    expect(outcome.kind).toBe("outOfModel");
  });

  it("maps 400 field errors to inline messages", async () => {
    const controller = new FormController(
      stubClient(async () => {
        throw new ApiError(400, "bad odds", { odds: "american odds magnitude must be >= 100" });
      }),
    );
    const outcome = await controller.submit(GOOD);
    expect(outcome.kind).toBe("fieldErrors");
    if (outcome.kind === "fieldErrors") expect(outcome.errors.odds).toMatch(/100/);
  });

  it("reports network failures for retry", async () => {
    const controller = new FormController(
      stubClient(async () => {
        throw new TypeError("fetch failed");
      }),
    );
    const outcome = await controller.submit(GOOD);
    expect(outcome.kind).toBe("network");
  });

  it("allows one in-flight request at a time", async () => {
    let release: (() => void) | undefined;
    const gate = new Promise<void>((resolve) => (release = resolve));
    const controller = new FormController(
      stubClient(async () => {
        await gate;
        return response(0.008);
      }),
    );
    const first = controller.submit(GOOD);
    const second = await controller.submit(GOOD);
    expect(second.kind).toBe("busy");
    release?.();
    expect((await first).kind).toBe("result");
  });

  it("tags results with the request sequence so stale reuse is impossible", async () => {
    const controller = new FormController(stubClient(async () => response(0.008)));
    const a = await controller.submit(GOOD);
    const b = await controller.submit({ ...GOOD, sportsbookSpread: "-3.5" });
    if (a.kind === "result" && b.kind === "result") {
      expect(b.view.requestSeq).toBeGreaterThan(a.view.requestSeq);
    } else {
      throw new Error("expected results");
    }
  });
});

describe("debounce", () => {
  it("collapses bursts into the trailing call", async () => {
    let calls = 0;
    const bump = debounce(() => calls++, 20);
    bump();
    bump();
    bump();
    await new Promise((resolve) => setTimeout(resolve, 60));
    expect(calls).toBe(1);
  });
});

import { describe, expect, it } from "vitest";

import {
  EngineApi,
  FixturePayload,
  IsoResult,
  QuiverJson,
} from "../src/api.js";
import { Session } from "../src/session.js";

// Fake engine: "mutation" reverses every arrow, which is involutive, so the
// semantics the session must preserve (double click restores the quiver)
// hold without real math. Isomorphism is structural equality.
class FakeEngine implements EngineApi {
  calls: string[] = [];

  constructor(private fixturesByName: Record<string, FixturePayload>) {}

  async fixtures(): Promise<string[]> {
    return Object.keys(this.fixturesByName);
  }

  async fixture(name: string): Promise<FixturePayload> {
    this.calls.push(`fixture:${name}`);
    const fixture = this.fixturesByName[name];
    if (!fixture) throw new Error(`unknown fixture ${name}`);
    return JSON.parse(JSON.stringify(fixture));
  }

  async mutate(quiver: QuiverJson, vertex: number): Promise<QuiverJson> {
    this.calls.push(`mutate:${vertex}`);
    return {
      vertices: quiver.vertices,
      arrows: quiver.arrows.map((a) => ({ from: a.to, to: a.from, mult: a.mult })),
    };
  }

  async apply(quiver: QuiverJson, sequence: number[]): Promise<QuiverJson> {
    let q = quiver;
    for (const v of sequence) q = await this.mutate(q, v);
    return q;
  }

  async iso(q1: QuiverJson, q2: QuiverJson): Promise<IsoResult> {
    this.calls.push("iso");
    const same = JSON.stringify(q1.arrows) === JSON.stringify(q2.arrows);
    return { isomorphic: same, witness: same ? {} : null };
  }

  async search(): Promise<number[] | null> {
    return [1];
  }
}

const baseFixture: FixturePayload = {
  vertices: [
    { id: 1, label: "a" },
    { id: 2, label: "b" },
  ],
  arrows: [{ from: 1, to: 2, mult: 1 }],
  layout: { "1": [0, 0], "2": [0, 1] },
};

const reversedFixture: FixturePayload = {
  vertices: baseFixture.vertices,
  arrows: [{ from: 2, to: 1, mult: 1 }],
};

function makeSession() {
  const engine = new FakeEngine({ base: baseFixture, reversed: reversedFixture });
  return { engine, session: new Session(engine) };
}

describe("session history", () => {
  it("loads a fixture and exposes its layout", async () => {
    const { session } = makeSession();
    await session.load("base");
    const snap = session.snapshot();
    expect(snap.fixtureName).toBe("base");
    expect(snap.current?.arrows).toEqual(baseFixture.arrows);
    expect(session.layout["1"]).toEqual([0, 0]);
    expect(snap.sequence).toEqual([]);
  });

  it("records clicks and double-click restores the quiver", async () => {
    const { session } = makeSession();
    await session.load("base");
    await session.clickMutate(1);
    await session.clickMutate(1);
    const snap = session.snapshot();
    expect(snap.sequence).toEqual([1, 1]);
    expect(snap.current).toEqual(session.initialQuiver);
  });

  it("undo and redo walk the history without engine calls", async () => {
    const { engine, session } = makeSession();
    await session.load("base");
    await session.clickMutate(1);
    const afterClick = session.snapshot().current;
    const callsBefore = engine.calls.filter((c) => c.startsWith("mutate")).length;
    session.undo();
    expect(session.snapshot().current).toEqual(session.initialQuiver);
    expect(session.snapshot().sequence).toEqual([]);
    session.redo();
    expect(session.snapshot().current).toEqual(afterClick);
    expect(session.snapshot().sequence).toEqual([1]);
    expect(engine.calls.filter((c) => c.startsWith("mutate")).length).toBe(callsBefore);
  });

  it("export produces the CLI sequence syntax", async () => {
    const { session } = makeSession();
    await session.load("base");
    await session.clickMutate(1);
    await session.clickMutate(2);
    expect(session.exportSequence()).toBe("1,2");
  });

  it("sets the match flag from the engine isomorphism answer", async () => {
    const { session } = makeSession();
    await session.load("base");
    await session.setTarget("reversed");
    expect(session.snapshot().match).toBe(false);
    await session.clickMutate(1);
    expect(session.snapshot().match).toBe(true);
    session.undo();
    // match refresh after undo is asynchronous; give it a tick
    await new Promise((resolve) => setTimeout(resolve, 0));
    expect(session.snapshot().match).toBe(false);
  });

  it("rejects overlapping engine requests", async () => {
    const { engine, session } = makeSession();
    await session.load("base");
    let release: (q: QuiverJson) => void = () => undefined;
    engine.mutate = () =>
      new Promise<QuiverJson>((resolve) => {
        release = resolve;
      });
    const pending = session.clickMutate(1);
    await expect(session.clickMutate(2)).rejects.toThrow(/in flight/);
    release(reversedFixture);
    await pending;
    expect(session.snapshot().sequence).toEqual([1]);
  });

  it("blocks undo while a request is in flight", async () => {
    const { engine, session } = makeSession();
    await session.load("base");
    await session.clickMutate(1); // history: one entry to undo
    let release: (q: QuiverJson) => void = () => undefined;
    const realMutate = engine.mutate.bind(engine);
    engine.mutate = () =>
      new Promise<QuiverJson>((resolve) => {
        release = resolve;
      });
    const pending = session.clickMutate(2);
    session.undo(); // ignored: request in flight, history untouched
    expect(session.snapshot().sequence).toEqual([1]);
    engine.mutate = realMutate;
    release({ vertices: baseFixture.vertices, arrows: [] });
    await pending;
    // the response landed in the current epoch, so it committed
    expect(session.snapshot().sequence).toEqual([1, 2]);
  });

  it("stale responses after a reload never clobber the new state", async () => {
    const { engine, session } = makeSession();
    await session.load("base");
    let release: (q: QuiverJson) => void = () => undefined;
    const realMutate = engine.mutate.bind(engine);
    engine.mutate = () =>
      new Promise<QuiverJson>((resolve) => {
        release = resolve;
      });
    const pending = session.clickMutate(1);
    engine.mutate = realMutate;
    session.loadJson(reversedFixture, "reloaded"); // bumps the epoch
    release({ vertices: [], arrows: [] });
    await pending;
    const snap = session.snapshot();
    expect(snap.fixtureName).toBe("reloaded");
    expect(snap.current?.arrows).toEqual(reversedFixture.arrows);
    expect(snap.sequence).toEqual([]);
  });

  it("surfaces engine errors and leaves the state unchanged", async () => {
    const { engine, session } = makeSession();
    await session.load("base");
    engine.mutate = async () => {
      throw new Error("boom");
    };
    await expect(session.clickMutate(1)).rejects.toThrow("boom");
    const snap = session.snapshot();
    expect(snap.sequence).toEqual([]);
    expect(snap.current).toEqual(session.initialQuiver);
    expect(snap.busy).toBe(false);
  });

  it("auto-search stores the found sequence", async () => {
    const { session } = makeSession();
    await session.load("base");
    await session.setTarget("reversed");
    const seq = await session.autoSearch(3);
    expect(seq).toEqual([1]);
    expect(session.snapshot().lastSearch).toEqual([1]);
  });
});

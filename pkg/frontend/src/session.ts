// Session state for the explorer. The session never computes mutations
// itself: every displayed quiver is an engine response. Undo/redo are local
// (they restore previously received quivers) and bump the request epoch so
// that any in-flight engine response is discarded instead of clobbering the
// restored state.

import { EngineApi, FixturePayload, Layout, QuiverJson, stripLayout } from "./api.js";

export interface SessionSnapshot {
  fixtureName: string | null;
  current: QuiverJson | null;
  sequence: number[];
  canUndo: boolean;
  canRedo: boolean;
  targetName: string | null;
  match: boolean;
  busy: boolean;
  lastSearch: number[] | null;
}

interface RedoEntry {
  quiver: QuiverJson;
  vertex: number;
}

export class Session {
  private initial: QuiverJson | null = null;
  private current: QuiverJson | null = null;
  private past: QuiverJson[] = [];
  private future: RedoEntry[] = [];
  private sequence: number[] = [];
  private fixtureName: string | null = null;
  private target: { name: string; quiver: QuiverJson } | null = null;
  private match = false;
  private epoch = 0;
  private busy = false;
  layout: Layout = {};
  lastSearch: number[] | null = null;

  constructor(private engine: EngineApi) {}

  snapshot(): SessionSnapshot {
    return {
      fixtureName: this.fixtureName,
      current: this.current,
      sequence: [...this.sequence],
      canUndo: this.past.length > 0,
      canRedo: this.future.length > 0,
      targetName: this.target?.name ?? null,
      match: this.match,
      busy: this.busy,
      lastSearch: this.lastSearch ? [...this.lastSearch] : null,
    };
  }

  get currentQuiver(): QuiverJson | null {
    return this.current;
  }

  get initialQuiver(): QuiverJson | null {
    return this.initial;
  }

  private begin(): number {
    if (this.busy) {
      throw new Error("an engine request is already in flight");
    }
    this.busy = true;
    this.epoch += 1;
    return this.epoch;
  }

  private settle(epoch: number): boolean {
    if (epoch === this.epoch) {
      this.busy = false;
      return true;
    }
    // a newer action superseded this response; leave state alone
    return false;
  }

  async load(name: string): Promise<void> {
    const epoch = this.begin();
    let fixture: FixturePayload;
    try {
      fixture = await this.engine.fixture(name);
    } catch (err) {
      this.settle(epoch);
      throw err;
    }
    if (!this.settle(epoch)) return;
    this.fixtureName = name;
    this.initial = stripLayout(fixture);
    this.current = this.initial;
    this.layout = fixture.layout ?? {};
    this.past = [];
    this.future = [];
    this.sequence = [];
    this.lastSearch = null;
    await this.refreshMatch();
  }

  loadJson(quiver: QuiverJson, name = "(upload)"): void {
    this.epoch += 1;
    this.busy = false;
    this.fixtureName = name;
    this.initial = quiver;
    this.current = quiver;
    this.layout = {};
    this.past = [];
    this.future = [];
    this.sequence = [];
    this.lastSearch = null;
    this.match = false;
  }

  async clickMutate(vertex: number): Promise<void> {
    if (!this.current) throw new Error("no quiver loaded");
    const before = this.current;
    const epoch = this.begin();
    let next: QuiverJson;
    try {
      next = await this.engine.mutate(before, vertex);
    } catch (err) {
      this.settle(epoch);
      throw err;
    }
    if (!this.settle(epoch)) return;
    this.past.push(before);
    this.sequence.push(vertex);
    this.future = [];
    this.current = next;
    await this.refreshMatch();
  }

  undo(): void {
    if (this.busy || this.past.length === 0 || !this.current) return;
    this.epoch += 1; // discard any in-flight response
    const vertex = this.sequence.pop()!;
    this.future.push({ quiver: this.current, vertex });
    this.current = this.past.pop()!;
    void this.refreshMatch();
  }

  redo(): void {
    if (this.busy || this.future.length === 0 || !this.current) return;
    this.epoch += 1;
    const entry = this.future.pop()!;
    this.past.push(this.current);
    this.sequence.push(entry.vertex);
    this.current = entry.quiver;
    void this.refreshMatch();
  }

  async setTarget(name: string | null): Promise<void> {
    if (name === null) {
      this.target = null;
      this.match = false;
      return;
    }
    const fixture = await this.engine.fixture(name);
    this.target = { name, quiver: stripLayout(fixture) };
    await this.refreshMatch();
  }

  async autoSearch(maxDepth: number): Promise<number[] | null> {
    if (!this.current || !this.target) throw new Error("need a quiver and a target");
    const seq = await this.engine.search(this.current, this.target.quiver, maxDepth);
    this.lastSearch = seq;
    return seq;
  }

  exportSequence(): string {
    return this.sequence.join(",");
  }

  private async refreshMatch(): Promise<void> {
    if (!this.target || !this.current) {
      this.match = false;
      return;
    }
    const epochAtSend = this.epoch;
    const result = await this.engine.iso(this.current, this.target.quiver);
    if (epochAtSend === this.epoch) {
      this.match = result.isomorphic;
    }
  }
}

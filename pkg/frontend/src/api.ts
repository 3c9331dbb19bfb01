// Typed client for the engine's JSON service. All mutation math happens on
// the engine side; this module only moves JSON.

export interface QuiverVertex {
  id: number;
  label: string;
}

export interface QuiverArrow {
  from: number;
  to: number;
  mult: number;
}

export interface QuiverJson {
  vertices: QuiverVertex[];
  arrows: QuiverArrow[];
}

export type Layout = Record<string, [number, number]>;

export interface FixturePayload extends QuiverJson {
  layout?: Layout;
}

export interface IsoResult {
  isomorphic: boolean;
  witness: Record<string, number> | null;
}

export class EngineError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

export interface EngineApi {
  fixtures(): Promise<string[]>;
  fixture(name: string): Promise<FixturePayload>;
  mutate(quiver: QuiverJson, vertex: number): Promise<QuiverJson>;
  apply(quiver: QuiverJson, sequence: number[]): Promise<QuiverJson>;
  iso(q1: QuiverJson, q2: QuiverJson): Promise<IsoResult>;
  search(source: QuiverJson, target: QuiverJson, maxDepth: number): Promise<number[] | null>;
}

export class EngineClient implements EngineApi {
  constructor(private base: string) {}

  private async request(path: string, init?: RequestInit): Promise<any> {
    let resp: Response;
    try {
      resp = await fetch(this.base + path, init);
    } catch (err) {
      throw new EngineError(0, `engine unreachable: ${err}`);
    }
    const text = await resp.text();
    if (!resp.ok) {
      let detail = text;
      try {
        detail = JSON.parse(text).error ?? text;
      } catch {
        // non-JSON error body; surface it verbatim
      }
      throw new EngineError(resp.status, detail);
    }
    return JSON.parse(text);
  }

  private post(path: string, body: unknown): Promise<any> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async fixtures(): Promise<string[]> {
    return (await this.request("/fixtures")).fixtures;
  }

  async fixture(name: string): Promise<FixturePayload> {
    return (await this.request(`/fixtures/${name}`)).fixture;
  }

  async mutate(quiver: QuiverJson, vertex: number): Promise<QuiverJson> {
    return (await this.post("/mutate", { quiver, vertex })).quiver;
  }

  async apply(quiver: QuiverJson, sequence: number[]): Promise<QuiverJson> {
    return (await this.post("/apply", { quiver, sequence })).quiver;
  }

  async iso(q1: QuiverJson, q2: QuiverJson): Promise<IsoResult> {
    const data = await this.post("/iso", { q1, q2 });
    return { isomorphic: data.isomorphic, witness: data.witness };
  }

  async search(
    source: QuiverJson,
    target: QuiverJson,
    maxDepth: number,
  ): Promise<number[] | null> {
    return (await this.post("/search", { source, target, maxDepth })).sequence;
  }
}

export function stripLayout(fixture: FixturePayload): QuiverJson {
  return { vertices: fixture.vertices, arrows: fixture.arrows };
}

/** Small string-level SVG inspection helpers for the tests. */
import { readFileSync } from "node:fs";

export function fixture(name: string): string {
  return readFileSync(new URL(`./fixtures/preset/${name}`, import.meta.url), "utf-8");
}

export function fixturePath(name: string): string {
  return new URL(`./fixtures/preset/${name}`, import.meta.url).pathname;
}

/** All occurrences of an element, as attribute maps, in document order. */
export function extractTags(svg: string, name: string): Array<Map<string, string>> {
  const out: Array<Map<string, string>> = [];
  const pattern = new RegExp(`<${name}((?:\\s+[-\\w:]+="[^"]*")*)\\s*/?>`, "g");
  for (const match of svg.matchAll(pattern)) {
    const attrs = new Map<string, string>();
    for (const pair of match[1]!.matchAll(/([-\w:]+)="([^"]*)"/g)) {
      attrs.set(pair[1]!, pair[2]!);
    }
    out.push(attrs);
  }
  return out;
}

/** Inner markup of the <g data-method="..."> group (curve groups do not nest). */
export function methodGroup(svg: string, method: string): string {
  const match = svg.match(new RegExp(`<g data-method="${method}">(.*?)</g>`, "s"));
  if (!match) {
    throw new Error(`no <g data-method="${method}"> group in svg`);
  }
  return match[1]!;
}

export function textContents(svg: string): string[] {
  return Array.from(svg.matchAll(/<text[^>]*>([^<]*)<\/text>/g), (m) => m[1]!);
}

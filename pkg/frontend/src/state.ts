import type { InterestEdit, ModelDict } from "./types.js";

// Per-card accordion state. "how-open" strictly extends "why-open": the How
// flowchart renders underneath the Why (detailed) view, never instead of it.
export type Expansion = "collapsed" | "why-open" | "how-open";

export class ViewState {
  userId = "";
  committedModel: ModelDict | null = null;
  /** Uncommitted what-if edits; cleared on commit or discard. */
  draft: InterestEdit[] = [];
  private expansion = new Map<string, Expansion>();
  selectedKeyword = new Map<string, string>();

  expansionOf(pubId: string): Expansion {
    return this.expansion.get(pubId) ?? "collapsed";
  }

  openWhy(pubId: string): void {
    if (this.expansionOf(pubId) === "collapsed") {
      this.expansion.set(pubId, "why-open");
    }
  }

  openHow(pubId: string): void {
    // how requires the why accordion; jumping from collapsed opens both
    this.expansion.set(pubId, "how-open");
  }

  collapse(pubId: string): void {
    this.expansion.set(pubId, "collapsed");
    this.selectedKeyword.delete(pubId);
  }

  setDraft(edits: InterestEdit[]): void {
    this.draft = edits;
  }

  clearDraft(): void {
    this.draft = [];
  }

  commitModel(model: ModelDict): void {
    this.committedModel = model;
    this.clearDraft();
  }
}

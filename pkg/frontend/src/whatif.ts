import type { ApiClient } from "./api.js";
import { STATUS_COLORS } from "./palette.js";
import type { ViewState } from "./state.js";
import type { InterestEdit, ModelDict, WhatIfDiff } from "./types.js";

export const WHATIF_DEBOUNCE_MS = 300;

/** The What-if panel: weight sliders and add/remove controls over the
 * committed model. Every draft change debounce-posts a scenario and recolors
 * the publication status chart; nothing touches the committed model until
 * the commit button issues the PATCH. At most one response is applied per
 * draft generation: stale responses are discarded by sequence number. */
export class WhatIfPanel {
  private sequence = 0;
  private applied = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private draftWeights = new Map<string, number>();
  private removed = new Set<string>();
  private added = new Map<string, number>();
  private root: HTMLElement | null = null;

  constructor(
    private container: HTMLElement,
    private api: ApiClient,
    private state: ViewState,
    private onCommitted: (model: ModelDict) => void,
    private onDiff?: (diff: WhatIfDiff) => void,
  ) {}

  open(): void {
    const model = this.state.committedModel;
    if (!model || this.root) return;
    this.resetDraft();

    const panel = document.createElement("section");
    panel.className = "whatif-panel";
    this.root = panel;

    const sliders = document.createElement("div");
    sliders.className = "whatif-sliders";
    for (const interest of model.interests) {
      sliders.appendChild(this.sliderRow(interest.label, interest.weight));
    }

    const addRow = document.createElement("div");
    addRow.className = "whatif-add";
    const labelInput = document.createElement("input");
    labelInput.type = "text";
    labelInput.placeholder = "new interest";
    labelInput.className = "add-label";
    const addBtn = document.createElement("button");
    addBtn.className = "add-btn";
    addBtn.textContent = "ADD";
    addBtn.addEventListener("click", () => {
      const label = labelInput.value.trim();
      if (!label) return;
      this.added.set(label, 0.5);
      sliders.appendChild(this.sliderRow(label, 0.5));
      labelInput.value = "";
      this.scheduleRun();
    });
    addRow.append(labelInput, addBtn);

    const chart = document.createElement("div");
    chart.className = "status-chart";

    const actions = document.createElement("div");
    actions.className = "whatif-actions";
    const commit = document.createElement("button");
    commit.className = "commit-btn";
    commit.textContent = "COMMIT";
    commit.addEventListener("click", () => void this.commit());
    const discard = document.createElement("button");
    discard.className = "discard-btn";
    discard.textContent = "DISCARD";
    discard.addEventListener("click", () => this.discard());
    actions.append(commit, discard);

    panel.append(sliders, addRow, chart, actions);
    this.container.appendChild(panel);
    this.scheduleRun(); // identity run paints the baseline statuses
  }

  close(): void {
    this.root?.remove();
    this.root = null;
    if (this.timer) clearTimeout(this.timer);
    this.timer = null;
  }

  get isOpen(): boolean {
    return this.root !== null;
  }

  private resetDraft(): void {
    this.draftWeights.clear();
    this.removed.clear();
    this.added.clear();
    this.state.clearDraft();
  }

  private sliderRow(label: string, weight: number): HTMLElement {
    const row = document.createElement("div");
    row.className = "slider-row";
    row.dataset.label = label;

    const name = document.createElement("span");
    name.className = "slider-label";
    name.textContent = label;

    const slider = document.createElement("input");
    slider.type = "range";
    slider.min = "1";
    slider.max = "100";
    slider.value = String(Math.round(weight * 100));
    slider.className = "weight-slider";
    slider.addEventListener("input", () => {
      this.draftWeights.set(label, Number(slider.value) / 100);
      value.textContent = `${slider.value}%`;
      this.scheduleRun();
    });

    const value = document.createElement("span");
    value.className = "slider-value";
    value.textContent = `${slider.value}%`;

    const remove = document.createElement("button");
    remove.className = "remove-btn";
    remove.textContent = "×";
    remove.title = `remove ${label}`;
    remove.addEventListener("click", () => {
      if (this.added.has(label)) {
        this.added.delete(label);
      } else {
        this.removed.add(label);
      }
      row.remove();
      this.scheduleRun();
    });

    row.append(name, slider, value, remove);
    return row;
  }

  /** The draft as scenario edits against the committed model. */
  edits(): InterestEdit[] {
    const model = this.state.committedModel;
    const committed = new Map(
      (model?.interests ?? []).map((i) => [i.label, i.weight]));
    const edits: InterestEdit[] = [];
    for (const label of this.removed) {
      edits.push({ op: "remove", label });
    }
    for (const [label, weight] of this.draftWeights) {
      if (this.removed.has(label) || this.added.has(label)) continue;
      if (committed.get(label) !== weight) {
        edits.push({ op: "reweight", label, weight });
      }
    }
    for (const [label, weight] of this.added) {
      edits.push({ op: "add", label, weight: this.draftWeights.get(label) ?? weight });
    }
    return edits;
  }

  private scheduleRun(): void {
    if (this.timer) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.run();
    }, WHATIF_DEBOUNCE_MS);
  }

  private async run(): Promise<void> {
    const seq = ++this.sequence;
    const edits = this.edits();
    this.state.setDraft(edits);
    try {
      const diff = await this.api.postWhatIf(this.state.userId, edits);
      if (seq < this.applied || seq < this.sequence) return; // stale, discard
      this.applied = seq;
      this.renderChart(diff);
      this.onDiff?.(diff);
    } catch {
      if (this.root) {
        this.root.querySelector(".status-chart")!.textContent =
          "scenario failed; adjust the edits";
      }
    }
  }

  private renderChart(diff: WhatIfDiff): void {
    if (!this.root) return;
    const chart = this.root.querySelector(".status-chart")!;
    chart.replaceChildren();
    for (const status of diff.statuses) {
      const bar = document.createElement("div");
      bar.className = "status-bar";
      bar.dataset.pubId = status.publication_id;
      bar.dataset.status = status.status;
      bar.style.backgroundColor = STATUS_COLORS[status.status];
      bar.style.height = `${Math.max(status.new_score * 100, 2)}px`;
      bar.title = `${status.publication_id}: ${status.status} ` +
        `(${(status.old_score * 100).toFixed(1)}% → ` +
        `${(status.new_score * 100).toFixed(1)}%)`;
      chart.appendChild(bar);
    }
  }

  private async commit(): Promise<void> {
    const edits = this.edits();
    if (edits.length > 0) {
      const model = await this.api.patchInterests(this.state.userId, edits);
      this.state.commitModel(model);
      this.onCommitted(model);
    }
    this.close();
  }

  private discard(): void {
    this.resetDraft();
    this.close();
  }
}

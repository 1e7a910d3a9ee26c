import { interestColor } from "./palette.js";
import type {
  HowTracePayload,
  RecommendationItem,
  VectorView,
  WhyAbstractPayload,
  WhyDetailedPayload,
} from "./types.js";

export interface CardHandlers {
  onWhy: (pubId: string, card: HTMLElement) => void;
  onHow: (pubId: string, card: HTMLElement) => void;
}

/** The abstract text with its highlighted keywords bolded in the color of
 * the most similar interest (non-overlapping spans, left to right). */
function renderAbstract(item: RecommendationItem): HTMLElement {
  const p = document.createElement("p");
  p.className = "abstract";
  const why = item.explanation.payloads.why_abstract;
  const text = item.publication.abstract;
  if (!why) {
    p.textContent = text;
    return p;
  }

  const spans: { start: number; end: number; color: number; keyword: string }[] = [];
  for (const hl of why.highlighted_keywords) {
    for (const [start, end] of hl.spans) {
      spans.push({ start, end, color: hl.color_index, keyword: hl.text });
    }
  }
  spans.sort((a, b) => a.start - b.start || b.end - a.end);

  let cursor = 0;
  for (const span of spans) {
    if (span.start < cursor) continue; // overlap: first keyword wins
    p.appendChild(document.createTextNode(text.slice(cursor, span.start)));
    const strong = document.createElement("strong");
    strong.className = "hl";
    strong.dataset.keyword = span.keyword;
    strong.dataset.colorIndex = String(span.color);
    strong.style.color = interestColor(span.color);
    strong.textContent = text.slice(span.start, span.end);
    p.appendChild(strong);
    cursor = span.end;
  }
  p.appendChild(document.createTextNode(text.slice(cursor)));
  return p;
}

function renderBand(why: WhyAbstractPayload): HTMLElement {
  const band = document.createElement("div");
  band.className = "band";
  band.title = "similarity to each of your interests";
  for (const segment of why.band) {
    const el = document.createElement("div");
    el.className = "band-segment";
    el.dataset.label = segment.label;
    el.dataset.colorIndex = String(segment.color_index);
    el.style.backgroundColor = interestColor(segment.color_index);
    el.style.height = `${Math.max(segment.percent, 2)}px`;
    el.title = `${segment.label}: ${segment.percent}%`;
    band.appendChild(el);
  }
  return band;
}

/** One recommendation card: score top right, interest band on the left,
 * highlighted abstract, and the on-demand WHY? / HOW? buttons. The
 * accordion below stays EMPTY (not merely hidden) while collapsed. */
export function renderCard(
  container: HTMLElement,
  item: RecommendationItem,
  handlers: CardHandlers,
): HTMLElement {
  const card = document.createElement("article");
  card.className = "card";
  card.dataset.pubId = item.publication.id;

  const header = document.createElement("header");
  const title = document.createElement("h3");
  title.textContent = item.publication.title;
  const percent = document.createElement("span");
  percent.className = "percent";
  percent.textContent = `${item.display_percent}%`;
  header.append(title, percent);

  const body = document.createElement("div");
  body.className = "card-body";
  const why = item.explanation.payloads.why_abstract;
  if (why) body.appendChild(renderBand(why));
  const main = document.createElement("div");
  main.className = "card-main";
  main.appendChild(renderAbstract(item));

  const actions = document.createElement("div");
  actions.className = "actions";
  const whyBtn = document.createElement("button");
  whyBtn.className = "why-btn";
  whyBtn.textContent = "WHY?";
  whyBtn.addEventListener("click", () => handlers.onWhy(item.publication.id, card));
  const howBtn = document.createElement("button");
  howBtn.className = "how-btn";
  howBtn.textContent = "HOW?";
  howBtn.addEventListener("click", () => handlers.onHow(item.publication.id, card));
  actions.append(whyBtn, howBtn);
  main.appendChild(actions);

  body.appendChild(main);

  const accordion = document.createElement("div");
  accordion.className = "accordion";

  card.append(header, body, accordion);
  container.appendChild(card);
  return card;
}

/** Expand the card in place with the Why (detailed) view: a tag cloud whose
 * hover reveals the keyword's similarity bars against every interest. */
export function expandWhy(
  card: HTMLElement,
  payload: WhyDetailedPayload,
  interestColorOf: (label: string) => number | null,
  onKeywordHover?: (keyword: string) => void,
): void {
  const accordion = card.querySelector(".accordion")!;
  if (accordion.querySelector(".why-detailed")) return;

  const section = document.createElement("section");
  section.className = "why-detailed";

  const cloud = document.createElement("div");
  cloud.className = "tagcloud";
  const chart = document.createElement("div");
  chart.className = "keyword-bars";
  chart.textContent = "hover a keyword to see its similarity to your interests";

  for (const entry of payload.tagcloud) {
    const tag = document.createElement("span");
    tag.className = "tag";
    tag.dataset.keyword = entry.text;
    tag.style.fontSize = `${(0.8 + entry.size * 1.2).toFixed(2)}em`;
    tag.textContent = entry.text;
    tag.addEventListener("mouseenter", () => {
      renderKeywordBars(chart, entry.text, payload, interestColorOf);
      onKeywordHover?.(entry.text);
    });
    cloud.appendChild(tag);
  }

  section.append(cloud, chart);
  accordion.appendChild(section);
}

function renderKeywordBars(
  chart: HTMLElement,
  keyword: string,
  payload: WhyDetailedPayload,
  interestColorOf: (label: string) => number | null,
): void {
  chart.replaceChildren();
  chart.dataset.keyword = keyword;
  for (const bar of payload.bars[keyword] ?? []) {
    const row = document.createElement("div");
    row.className = "bar-row";
    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = bar.label;
    const track = document.createElement("div");
    track.className = "bar";
    track.dataset.label = bar.label;
    track.dataset.percent = String(bar.percent);
    track.style.width = `${Math.max(bar.percent, 0.5)}%`;
    track.style.backgroundColor = interestColor(interestColorOf(bar.label));
    const value = document.createElement("span");
    value.className = "bar-value";
    value.textContent = `${bar.percent}%`;
    row.append(label, track, value);
    chart.appendChild(row);
  }
}

function vectorText(view: VectorView): string {
  const head = view.head.map((v) => v.toFixed(3)).join(", ");
  return `[${head}, …] |v|=${view.norm.toFixed(4)} (${view.dim}d)`;
}

/** Extend an already-why-open card with the How view: a left navigation
 * panel over the three pipeline stages and the personalized flowchart,
 * node tooltips carrying a short description. */
export function expandHow(card: HTMLElement, trace: HowTracePayload): void {
  const accordion = card.querySelector(".accordion")!;
  if (accordion.querySelector(".how-trace")) return;

  const section = document.createElement("section");
  section.className = "how-trace";

  const nav = document.createElement("nav");
  nav.className = "stage-nav";
  const flow = document.createElement("div");
  flow.className = "flowchart";

  const stages: { name: string; render: (host: HTMLElement) => void }[] = [
    {
      name: trace.stage1.name,
      render(host) {
        for (const interest of trace.stage1.interests) {
          host.appendChild(node(
            `${interest.label} (w=${interest.weight.toFixed(2)})`,
            "an interest from your model and its weight"));
        }
        for (const kp of trace.stage1.keyphrases) {
          host.appendChild(node(
            `${kp.text} (s=${kp.salience.toFixed(3)})`,
            "a keyphrase extracted from the publication with its salience"));
        }
      },
    },
    {
      name: trace.stage2.name,
      render(host) {
        for (const [label, vec] of Object.entries(trace.stage2.interest_vectors)) {
          host.appendChild(node(`${label} → ${vectorText(vec)}`,
            "embedding vector of one interest (first components and norm)"));
        }
        for (const [text, vec] of Object.entries(trace.stage2.keyphrase_vectors)) {
          host.appendChild(node(`${text} → ${vectorText(vec)}`,
            "embedding vector of one keyphrase (first components and norm)"));
        }
        host.appendChild(node(
          `interest model → ${vectorText(trace.stage2.model_vector)}`,
          "weighted average of your interest embeddings"));
        host.appendChild(node(
          `publication → ${vectorText(trace.stage2.publication_vector)}`,
          "salience-weighted average of the keyphrase embeddings"));
      },
    },
    {
      name: trace.stage3.name,
      render(host) {
        const s3 = trace.stage3;
        host.appendChild(node(`dot product = ${s3.dot.toFixed(6)}`,
          "dot product of the two aggregate embeddings"));
        host.appendChild(node(
          `norms = ${s3.model_norm.toFixed(6)} · ${s3.publication_norm.toFixed(6)}`,
          "lengths of the interest-model and publication embeddings"));
        host.appendChild(node(
          `cosine = ${s3.cosine.toFixed(6)} → ${s3.display_percent}%`,
          "dot product divided by the product of norms, shown as a percent"));
      },
    },
  ];

  stages.forEach((stage, index) => {
    const btn = document.createElement("button");
    btn.className = "stage-btn";
    btn.dataset.stage = String(index + 1);
    btn.textContent = `${index + 1}. ${stage.name}`;
    btn.addEventListener("click", () => showStage(index));
    nav.appendChild(btn);
  });

  const panes = stages.map((stage, index) => {
    const pane = document.createElement("div");
    pane.className = "stage-pane";
    pane.dataset.stage = String(index + 1);
    const heading = document.createElement("h4");
    heading.textContent = stage.name;
    pane.appendChild(heading);
    stage.render(pane);
    flow.appendChild(pane);
    return pane;
  });

  function showStage(index: number): void {
    panes.forEach((pane, i) => pane.classList.toggle("active", i <= index));
  }
  showStage(0); // stepwise: later stages expand via the nav panel

  section.append(nav, flow);
  accordion.appendChild(section);
}

function node(text: string, description: string): HTMLElement {
  const el = document.createElement("div");
  el.className = "flow-node";
  el.textContent = text;
  el.title = description; // hover tooltip
  return el;
}

/** Collapse removes the on-demand content from the DOM entirely. */
export function collapseCard(card: HTMLElement): void {
  card.querySelector(".accordion")!.replaceChildren();
}

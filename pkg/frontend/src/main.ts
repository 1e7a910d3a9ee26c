import { ApiClient, ApiError } from "./api.js";
import { collapseCard, expandHow, expandWhy, renderCard } from "./card.js";
import { renderInterestChips } from "./chips.js";
import { ViewState } from "./state.js";
import type { ModelDict, RecommendationsResponse } from "./types.js";
import { WhatIfPanel } from "./whatif.js";

export interface App {
  state: ViewState;
  whatif: WhatIfPanel;
  refresh: () => Promise<void>;
}

/** Boot the explanation interface: interest chips on top, recommendation
 * cards below, everything past What + Why (abstract) strictly on demand. */
export async function boot(
  root: HTMLElement,
  api: ApiClient,
  userId: string,
): Promise<App> {
  const state = new ViewState();
  state.userId = userId;

  root.replaceChildren();
  const banner = document.createElement("div");
  banner.className = "banner";
  banner.hidden = true;
  const chipHost = document.createElement("div");
  chipHost.className = "chip-host";
  const panelHost = document.createElement("div");
  panelHost.className = "panel-host";
  const cardHost = document.createElement("div");
  cardHost.className = "card-host";
  root.append(banner, chipHost, panelHost, cardHost);

  function showError(message: string): void {
    banner.hidden = false;
    banner.replaceChildren();
    banner.appendChild(document.createTextNode(message));
    const dismiss = document.createElement("button");
    dismiss.className = "dismiss";
    dismiss.textContent = "×";
    dismiss.addEventListener("click", () => (banner.hidden = true));
    banner.appendChild(dismiss);
  }

  const whatif = new WhatIfPanel(panelHost, api, state, () => {
    void refresh();
  });

  function colorOf(label: string): number | null {
    const interest = state.committedModel?.interests.find(
      (i) => i.label === label);
    return interest?.color_index ?? null;
  }

  async function loadWhy(pubId: string, card: HTMLElement): Promise<void> {
    try {
      const payload = await api.getWhy(state.userId, pubId);
      state.openWhy(pubId);
      expandWhy(card, payload, colorOf, (keyword) =>
        state.selectedKeyword.set(pubId, keyword));
    } catch (err) {
      showError(err instanceof ApiError ? err.message : "why view failed");
    }
  }

  async function loadHow(pubId: string, card: HTMLElement): Promise<void> {
    if (state.expansionOf(pubId) === "collapsed") {
      await loadWhy(pubId, card); // accordion nesting: how implies why
    }
    try {
      const trace = await api.getHow(state.userId, pubId);
      state.openHow(pubId);
      expandHow(card, trace);
    } catch (err) {
      // the why view stays intact; surface a retry affordance
      showError(err instanceof ApiError ? err.message : "trace fetch failed");
    }
  }

  function renderModel(model: ModelDict): void {
    const active = model.interests.filter((i) => i.color_index !== null);
    renderInterestChips(chipHost, active, () => whatif.open());
  }

  function renderRecommendations(body: RecommendationsResponse): void {
    cardHost.replaceChildren();
    for (const item of body.items) {
      const card = renderCard(cardHost, item, {
        onWhy: (pubId, el) => {
          if (state.expansionOf(pubId) === "collapsed") {
            void loadWhy(pubId, el);
          } else {
            state.collapse(pubId);
            collapseCard(el);
          }
        },
        onHow: (pubId, el) => void loadHow(pubId, el),
      });
      card.dataset.score = String(item.overall_score);
    }
  }

  async function refresh(): Promise<void> {
    const [interests, recommendations] = await Promise.all([
      api.getInterests(state.userId),
      api.getRecommendations(state.userId, "basic"),
    ]);
    state.committedModel = {
      user_id: state.userId,
      interests: interests.interests,
    };
    renderModel(state.committedModel);
    renderRecommendations(recommendations);
  }

  try {
    await refresh();
  } catch (err) {
    showError(err instanceof ApiError ? err.message : "failed to load");
  }
  return { state, whatif, refresh };
}

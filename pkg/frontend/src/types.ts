// JSON shapes of the recommendation service API (schema_version 1).

export interface Interest {
  label: string;
  weight: number;
  color_index: number | null;
}

export interface ModelDict {
  user_id: string;
  interests: Interest[];
}

export interface WhatPayload {
  schema_version: number;
  interests: Interest[];
}

export interface BandSegment {
  label: string;
  color_index: number;
  percent: number;
}

export interface HighlightedKeyword {
  text: string;
  color_index: number;
  spans: [number, number][];
}

export interface WhyAbstractPayload {
  schema_version: number;
  display_percent: number;
  band: BandSegment[];
  highlighted_keywords: HighlightedKeyword[];
}

export interface WhyDetailedPayload {
  schema_version: number;
  tagcloud: { text: string; size: number }[];
  bars: Record<string, { label: string; percent: number }[]>;
}

export interface VectorView {
  head: number[];
  norm: number;
  dim: number;
  values?: number[];
}

export interface HowTracePayload {
  schema_version: number;
  stage1: {
    name: string;
    interests: { label: string; weight: number }[];
    keyphrases: { text: string; salience: number }[];
  };
  stage2: {
    name: string;
    interest_vectors: Record<string, VectorView>;
    keyphrase_vectors: Record<string, VectorView>;
    model_vector: VectorView;
    publication_vector: VectorView;
  };
  stage3: {
    name: string;
    dot: number;
    model_norm: number;
    publication_norm: number;
    cosine: number;
    display_percent: number;
  };
}

export interface ExplanationBundle {
  schema_version: number;
  level: "basic" | "intermediate" | "advanced";
  payloads: {
    what?: WhatPayload;
    what_if?: unknown;
    why_abstract?: WhyAbstractPayload;
    why_detailed?: WhyDetailedPayload;
    how?: HowTracePayload;
  };
}

export interface RecommendationItem {
  publication: { id: string; title: string; abstract: string };
  overall_score: number;
  display_percent: number;
  per_interest: Record<string, number>;
  explanation: ExplanationBundle;
}

export interface RecommendationsResponse {
  threshold: number;
  k: number;
  level: string;
  items: RecommendationItem[];
}

export type WhatIfStatus =
  | "unchanged-recommended"
  | "newly-recommended"
  | "no-longer-recommended"
  | "unchanged-absent";

export interface WhatIfDiff {
  schema_version: number;
  statuses: {
    publication_id: string;
    status: WhatIfStatus;
    old_score: number;
    new_score: number;
  }[];
  new_recommendations: {
    threshold: number;
    k: number;
    items: { publication_id: string; overall_score: number; display_percent: number }[];
  };
}

export interface InterestEdit {
  op: "add" | "remove" | "reweight";
  label: string;
  weight?: number;
}

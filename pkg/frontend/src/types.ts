/** Wire types for the recommendation service JSON API. */

export type ChannelName = "social-context" | "social-relations";

export const CHANNELS: ChannelName[] = ["social-context", "social-relations"];

export interface SessionInfo {
  session_id: string;
  presenter: string;
  location: string;
  start: number;
  end: number;
  tags: string[];
}

export interface GateValues {
  pearson: number | null;
  tie_strength: number | null;
  degree_centrality: number | null;
}

export interface MatchedSlot {
  location: string;
  start: number;
  end: number;
}

export interface ExplanationInfo {
  relation_kinds: string[];
  gate_values: GateValues;
  matched_slot: MatchedSlot;
}

export interface RecommendationInfo {
  session_id: string;
  presenter: string;
  location: string;
  start: number;
  end: number;
  tags: string[];
  channel: ChannelName;
  score: number;
  explanation: ExplanationInfo;
}

export interface ThresholdsInfo {
  gamma: number;
  beta: number;
  delta: number;
  frame_t: number;
  top_n: number;
}

export interface ParticipantInfo {
  id: string;
  is_presenter: boolean;
}

export interface ParticipantsResponse {
  version: number;
  participants: ParticipantInfo[];
}

export interface SessionsResponse {
  version: number;
  sessions: SessionInfo[];
}

export interface RecommendationsResponse {
  version: number;
  participant: string;
  thresholds: ThresholdsInfo;
  channels: Partial<Record<ChannelName, RecommendationInfo[]>>;
}

export interface CentralityResponse {
  version: number;
  presenter: string;
  raw: number;
  normalized: number;
}

export interface WriteResponse {
  version: number;
}

export interface SlotInput {
  location: string;
  start: number;
  end: number;
}

export interface ContactInput {
  other: string;
  frequency: number;
  duration: number;
}

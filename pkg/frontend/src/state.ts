/** View state: sliders, snapshot-version tracking, stale-response guard.
 *
 * The service is the single source of truth; this module never computes a
 * similarity, tie, or centrality. It only decides which server answer is
 * current: responses older than the newest version already seen are
 * discarded, and every displayed list stays annotated with the snapshot
 * version it came from.
 */

import type { ChannelName, RecommendationInfo, RecommendationsResponse } from "./types.js";
import { CHANNELS } from "./types.js";

export interface SliderValues {
  gamma: number;
  beta: number;
  delta: number;
  topN: number;
}

/** UI slider ranges; gamma/delta mirror the engine's hard bounds, beta is
 * unbounded server-side but capped at 1 in the UI (well above the demo
 * data's tie ceiling). */
export const SLIDER_LIMITS = {
  gamma: { min: -1, max: 1, step: 0.05 },
  beta: { min: 0, max: 1, step: 0.05 },
  delta: { min: 0, max: 1, step: 0.05 },
  topN: { min: 1, max: 50, step: 1 },
} as const;

function clamp(value: number, min: number, max: number): number {
  if (Number.isNaN(value)) return min;
  return Math.min(max, Math.max(min, value));
}

export function clampSliders(values: SliderValues): SliderValues {
  return {
    gamma: clamp(values.gamma, SLIDER_LIMITS.gamma.min, SLIDER_LIMITS.gamma.max),
    beta: clamp(values.beta, SLIDER_LIMITS.beta.min, SLIDER_LIMITS.beta.max),
    delta: clamp(values.delta, SLIDER_LIMITS.delta.min, SLIDER_LIMITS.delta.max),
    topN: Math.round(clamp(values.topN, SLIDER_LIMITS.topN.min, SLIDER_LIMITS.topN.max)),
  };
}

export type Lists = Record<ChannelName, RecommendationInfo[]>;

export function emptyLists(): Lists {
  return { "social-context": [], "social-relations": [] };
}

export class ViewState {
  participant: string | null = null;
  sliders: SliderValues = { gamma: 1.0, beta: 0.5, delta: 0.5, topN: 10 };
  slidersTouched = false;
  /** Highest snapshot version seen in any response. */
  lastVersion = 0;
  /** The lists on display and the snapshot version they came from. */
  lists: Lists = emptyLists();
  listsVersion = 0;

  setSliders(values: SliderValues): void {
    this.sliders = clampSliders(values);
    this.slidersTouched = true;
  }

  /** Record a version observed in any response (writes, listings). */
  observeVersion(version: number): void {
    if (version > this.lastVersion) this.lastVersion = version;
  }

  /** Adopt a recommendations response unless it is stale.
   *
   * Returns true when adopted. A response is stale when it carries an
   * older snapshot version than the newest one already seen.
   */
  applyRecommendations(response: RecommendationsResponse): boolean {
    if (response.version < this.lastVersion) return false;
    this.observeVersion(response.version);
    if (response.participant !== this.participant) return false;
    const lists = emptyLists();
    for (const channel of CHANNELS) {
      lists[channel] = response.channels[channel] ?? [];
    }
    this.lists = lists;
    this.listsVersion = response.version;
    if (!this.slidersTouched) {
      // first fetch seeds the sliders from the snapshot's own thresholds
      this.sliders = clampSliders({
        gamma: response.thresholds.gamma,
        beta: response.thresholds.beta,
        delta: response.thresholds.delta,
        topN: response.thresholds.top_n,
      });
    }
    return true;
  }

  clearLists(): void {
    this.lists = emptyLists();
    this.listsVersion = 0;
  }
}

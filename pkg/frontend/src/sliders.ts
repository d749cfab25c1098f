/** What-if gate sliders. Moving one re-queries the service with threshold
 * overrides; nothing is computed client-side.
 */

import { SLIDER_LIMITS, type SliderValues } from "./state.js";

export interface SliderPanel {
  element: HTMLElement;
  setValues: (values: SliderValues) => void;
}

const FIELDS: { key: keyof SliderValues; id: string; label: string }[] = [
  { key: "gamma", id: "slider-gamma", label: "similarity gate γ" },
  { key: "beta", id: "slider-beta", label: "tie gate β" },
  { key: "delta", id: "slider-delta", label: "centrality gate δ" },
  { key: "topN", id: "slider-topn", label: "list length" },
];

const LIMITS: Record<keyof SliderValues, { min: number; max: number; step: number }> = {
  gamma: SLIDER_LIMITS.gamma,
  beta: SLIDER_LIMITS.beta,
  delta: SLIDER_LIMITS.delta,
  topN: SLIDER_LIMITS.topN,
};

export function buildSliderPanel(
  doc: Document,
  current: () => SliderValues,
  onChange: (values: SliderValues) => void,
): SliderPanel {
  const panel = doc.createElement("section");
  panel.id = "sliders";
  panel.className = "sliders";

  const inputs = new Map<keyof SliderValues, { range: HTMLInputElement; value: HTMLElement }>();

  for (const field of FIELDS) {
    const row = doc.createElement("label");
    row.className = "slider-row";

    const text = doc.createElement("span");
    text.textContent = field.label;
    row.appendChild(text);

    const range = doc.createElement("input");
    range.type = "range";
    range.id = field.id;
    const limits = LIMITS[field.key];
    range.min = String(limits.min);
    range.max = String(limits.max);
    range.step = String(limits.step);
    row.appendChild(range);

    const value = doc.createElement("span");
    value.className = "slider-value";
    value.id = `${field.id}-value`;
    row.appendChild(value);

    range.addEventListener("input", () => {
      const next = { ...current(), [field.key]: Number(range.value) };
      onChange(next);
    });

    inputs.set(field.key, { range, value });
    panel.appendChild(row);
  }

  return {
    element: panel,
    setValues: (values: SliderValues) => {
      for (const field of FIELDS) {
        const pair = inputs.get(field.key)!;
        const v = values[field.key];
        pair.range.value = String(v);
        pair.value.textContent = field.key === "topN" ? String(v) : v.toFixed(2);
      }
    },
  };
}

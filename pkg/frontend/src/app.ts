/** Explorer application: wires the API client, view state, schedule grid,
 * recommendation lists, what-if sliders, context editors, and the
 * explanation panel together. Boots itself in a browser when an element
 * with id "app" exists; tests call createApp() directly.
 */

import { ApiClient } from "./api.js";
import {
  buildAvailabilityEditor,
  buildContactsEditor,
  buildRatingsEditor,
} from "./editor.js";
import { renderExplanation } from "./explain.js";
import { formatScore, renderScheduleGrid } from "./grid.js";
import { buildSliderPanel } from "./sliders.js";
import { ViewState, type SliderValues } from "./state.js";
import { CHANNELS, type ChannelName, type SessionInfo } from "./types.js";

export interface AppOptions {
  /** Poll the service for new snapshot versions every N ms; 0 disables. */
  pollMs?: number;
}

export interface App {
  state: ViewState;
  api: ApiClient;
  root: HTMLElement;
  selectParticipant(pid: string): Promise<void>;
  refresh(): Promise<void>;
  /** Resolves once every in-flight request (including renders) settled. */
  idle(): Promise<void>;
  dispose(): void;
}

export function createApp(root: HTMLElement, api: ApiClient, options: AppOptions = {}): App {
  const doc = root.ownerDocument;
  const state = new ViewState();

  let sessions: SessionInfo[] = [];
  let selectedSession: string | null = null;
  let refreshSeq = 0;
  let pollTimer: ReturnType<typeof setInterval> | null = null;

  // ---- in-flight tracking for idle() ----
  let pending = 0;
  let idleWaiters: (() => void)[] = [];
  function track<T>(promise: Promise<T>): Promise<T> {
    pending += 1;
    return promise.finally(() => {
      pending -= 1;
      if (pending === 0) {
        const waiters = idleWaiters;
        idleWaiters = [];
        for (const wake of waiters) wake();
      }
    });
  }

  // ---- static skeleton ----
  root.innerHTML = `
    <header>
      <h1>conference session explorer</h1>
      <span id="version-badge" class="version-badge"></span>
    </header>
    <div id="reload-banner" class="reload-banner" hidden></div>
    <div class="columns">
      <div class="left">
        <label class="participant-row">I am
          <select id="participant-select"><option value="">choose...</option></select>
        </label>
        <div id="slider-mount"></div>
        <section>
          <h3>schedule</h3>
          <div id="grid" class="grid"></div>
        </section>
        <section>
          <h3>recommended for me</h3>
          <div class="lists">
            <div>
              <h4>similar interests (social-context)</h4>
              <ol id="list-social-context" class="rec-list"></ol>
            </div>
            <div>
              <h4>my network (social-relations)</h4>
              <ol id="list-social-relations" class="rec-list"></ol>
            </div>
          </div>
        </section>
      </div>
      <div class="right">
        <section>
          <h3>explanation</h3>
          <div id="explanation"></div>
        </section>
        <div id="editors"></div>
      </div>
    </div>
  `;

  const versionBadge = root.querySelector<HTMLElement>("#version-badge")!;
  const banner = root.querySelector<HTMLElement>("#reload-banner")!;
  const selector = root.querySelector<HTMLSelectElement>("#participant-select")!;
  const gridEl = root.querySelector<HTMLElement>("#grid")!;
  const explanationEl = root.querySelector<HTMLElement>("#explanation")!;
  const listEls: Record<ChannelName, HTMLOListElement> = {
    "social-context": root.querySelector<HTMLOListElement>("#list-social-context")!,
    "social-relations": root.querySelector<HTMLOListElement>("#list-social-relations")!,
  };

  const sliderPanel = buildSliderPanel(
    doc,
    () => state.sliders,
    (values: SliderValues) => {
      state.setSliders(values);
      sliderPanel.setValues(state.sliders);
      void track(refresh());
    },
  );
  root.querySelector("#slider-mount")!.appendChild(sliderPanel.element);
  sliderPanel.setValues(state.sliders);

  function showConflict(message: string): void {
    banner.hidden = false;
    banner.textContent =
      `someone changed the data first (${message}); reload to continue from the latest snapshot`;
  }

  function onWritten(version: number): void {
    state.observeVersion(version);
    banner.hidden = true;
    void track(refresh());
  }

  const editorCallbacks = {
    declaredVersion: () => (state.lastVersion > 0 ? state.lastVersion : undefined),
    onWritten,
    onConflict: showConflict,
  };

  const editorsMount = root.querySelector<HTMLElement>("#editors")!;
  const ratingsEditor = buildRatingsEditor(
    doc,
    (ratings, version) => api.putRatings(state.participant ?? "", ratings, version),
    editorCallbacks,
    track,
  );
  const availabilityEditor = buildAvailabilityEditor(
    doc,
    (slots, version) => api.putAvailability(state.participant ?? "", slots, version),
    editorCallbacks,
    track,
  );
  const contactsEditor = buildContactsEditor(
    doc,
    (contacts, version) => api.putContacts(state.participant ?? "", contacts, version),
    editorCallbacks,
    track,
  );
  editorsMount.append(ratingsEditor.element, availabilityEditor.element, contactsEditor.element);

  // ---- rendering ----
  function renderLists(): void {
    versionBadge.textContent = state.listsVersion
      ? `snapshot v${state.listsVersion}`
      : "";
    for (const channel of CHANNELS) {
      const el = listEls[channel];
      el.textContent = "";
      for (const rec of state.lists[channel]) {
        const item = doc.createElement("li");
        const button = doc.createElement("button");
        button.type = "button";
        button.className = "rec-entry";
        button.dataset.sessionId = rec.session_id;
        button.textContent =
          `${rec.session_id} by ${rec.presenter} @ ${rec.location} ` +
          `${rec.start}-${rec.end}`;
        const badge = doc.createElement("span");
        badge.className = "score-badge";
        badge.textContent = formatScore(rec.score);
        button.appendChild(badge);
        button.addEventListener("click", () => selectSession(rec.session_id));
        item.appendChild(button);
        el.appendChild(item);
      }
      if (state.lists[channel].length === 0) {
        const empty = doc.createElement("li");
        empty.className = "empty";
        empty.textContent = "nothing right now";
        el.appendChild(empty);
      }
    }
    renderScheduleGrid(gridEl, sessions, state.lists, selectSession);
    renderExplanationPanel();
  }

  function renderExplanationPanel(): void {
    const all = [...state.lists["social-context"], ...state.lists["social-relations"]];
    renderExplanation(explanationEl, selectedSession, all);
  }

  function selectSession(sessionId: string): void {
    selectedSession = sessionId;
    renderExplanationPanel();
  }

  // ---- data flow ----
  async function refresh(): Promise<void> {
    if (!state.participant) {
      state.clearLists();
      renderLists();
      return;
    }
    const seq = ++refreshSeq;
    const overrides = state.slidersTouched
      ? {
          gamma: state.sliders.gamma,
          beta: state.sliders.beta,
          delta: state.sliders.delta,
          top_n: state.sliders.topN,
        }
      : {};
    const response = await api.recommendations(state.participant, overrides);
    if (seq !== refreshSeq) return; // a newer query is already underway
    if (state.applyRecommendations(response)) {
      sliderPanel.setValues(state.sliders);
      renderLists();
    }
  }

  async function loadRoster(): Promise<void> {
    const [participants, sessionsResponse] = await Promise.all([
      api.participants(),
      api.sessions(),
    ]);
    state.observeVersion(participants.version);
    state.observeVersion(sessionsResponse.version);
    sessions = sessionsResponse.sessions;
    for (const participant of participants.participants) {
      const option = doc.createElement("option");
      option.value = participant.id;
      option.textContent = participant.is_presenter
        ? `${participant.id} (presenter)`
        : participant.id;
      selector.appendChild(option);
    }
    renderLists();
  }

  selector.addEventListener("change", () => {
    void track(selectParticipant(selector.value));
  });

  async function selectParticipant(pid: string): Promise<void> {
    state.participant = pid || null;
    selectedSession = null;
    if (selector.value !== pid) selector.value = pid;
    await refresh();
  }

  async function poll(): Promise<void> {
    const response = await api.participants();
    if (response.version > state.lastVersion) {
      state.observeVersion(response.version);
      await refresh(); // somebody wrote; short-circuits when version is unchanged
    }
  }

  if (options.pollMs && options.pollMs > 0) {
    pollTimer = setInterval(() => void track(poll().catch(() => undefined)), options.pollMs);
  }

  void track(loadRoster());

  return {
    state,
    api,
    root,
    selectParticipant: (pid: string) => track(selectParticipant(pid)),
    refresh: () => track(refresh()),
    idle: () =>
      pending === 0
        ? Promise.resolve()
        : new Promise<void>((resolve) => idleWaiters.push(resolve)),
    dispose: () => {
      if (pollTimer !== null) clearInterval(pollTimer);
    },
  };
}

function defaultBaseUrl(win: Window): string {
  const fromQuery = new URL(win.location.href).searchParams.get("api");
  return fromQuery ?? "http://127.0.0.1:8000";
}

/* c8 ignore start -- browser-only bootstrap */
if (typeof document !== "undefined") {
  const mount = document.getElementById("app");
  if (mount) {
    const input = document.getElementById("base-url") as HTMLInputElement | null;
    const base = input?.value || defaultBaseUrl(window);
    if (input) input.value = base;
    let app = createApp(mount, new ApiClient(base), { pollMs: 2000 });
    input?.addEventListener("change", () => {
      app.dispose();
      mount.textContent = "";
      app = createApp(mount, new ApiClient(input.value), { pollMs: 2000 });
    });
  }
}
/* c8 ignore stop */

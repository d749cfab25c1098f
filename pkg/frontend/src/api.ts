/** Thin typed client; every displayed number originates from these calls. */

import type {
  CentralityResponse,
  ContactInput,
  ParticipantsResponse,
  RecommendationsResponse,
  SessionsResponse,
  SlotInput,
  WriteResponse,
} from "./types.js";

export interface ThresholdOverrides {
  gamma?: number;
  beta?: number;
  delta?: number;
  top_n?: number;
  channel?: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string[],
  ) {
    super(detail.join("; ") || `HTTP ${status}`);
    this.name = "ApiError";
  }
}

function asDetailList(body: unknown): string[] {
  if (body && typeof body === "object" && "detail" in body) {
    const detail = (body as { detail: unknown }).detail;
    if (Array.isArray(detail)) {
      return detail.map((d) => (typeof d === "string" ? d : JSON.stringify(d)));
    }
    if (typeof detail === "string") return [detail];
  }
  return [];
}

export class ApiClient {
  constructor(public baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, [`service unreachable at ${this.baseUrl}: ${String(err)}`]);
    }
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      throw new ApiError(response.status, asDetailList(body));
    }
    return body as T;
  }

  participants(): Promise<ParticipantsResponse> {
    return this.request("/participants");
  }

  sessions(): Promise<SessionsResponse> {
    return this.request("/sessions");
  }

  recommendations(
    pid: string,
    overrides: ThresholdOverrides = {},
  ): Promise<RecommendationsResponse> {
    const params = new URLSearchParams();
    for (const [key, value] of Object.entries(overrides)) {
      if (value !== undefined) params.set(key, String(value));
    }
    const query = params.toString();
    return this.request(
      `/participants/${encodeURIComponent(pid)}/recommendations${query ? "?" + query : ""}`,
    );
  }

  centrality(pid: string): Promise<CentralityResponse> {
    return this.request(`/presenters/${encodeURIComponent(pid)}/centrality`);
  }

  private put<T>(path: string, payload: unknown): Promise<T> {
    return this.request(path, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  putRatings(
    pid: string,
    ratings: Record<string, number>,
    version?: number,
  ): Promise<WriteResponse> {
    return this.put(`/participants/${encodeURIComponent(pid)}/ratings`, { version, ratings });
  }

  putAvailability(pid: string, slots: SlotInput[], version?: number): Promise<WriteResponse> {
    return this.put(`/participants/${encodeURIComponent(pid)}/availability`, { version, slots });
  }

  putContacts(pid: string, contacts: ContactInput[], version?: number): Promise<WriteResponse> {
    return this.put(`/participants/${encodeURIComponent(pid)}/contacts`, { version, contacts });
  }
}

/** Browser entry point: mount the app and pick the service base URL. */

import { createApp } from "./app.js";

function baseUrl(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("api") ?? "http://127.0.0.1:8601";
}

window.addEventListener("DOMContentLoaded", () => {
  const root = document.getElementById("app");
  if (root) {
    createApp(root, { baseUrl: baseUrl(), fetchImpl: (input, init) => fetch(input, init) });
  }
});

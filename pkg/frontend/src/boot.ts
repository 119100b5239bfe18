// Browser entry point: wire the app to the live document against the
// same-origin service.

import { Client } from "./api.js";
import { setupApp } from "./main.js";

setupApp(document, new Client(""));

// Spawns the real Python backend on an ephemeral port for integration
// tests; the UI must consume the primary component only through its HTTP
// interface, so the tests do the same.

import { spawn, type ChildProcess } from "node:child_process";

export interface Backend {
  baseUrl: string;
  stop(): void;
}

export async function startBackend(): Promise<Backend> {
  const child: ChildProcess = spawn(
    "python3",
    ["-m", "paradoxlab.cli", "serve", "--port", "0"],
    { stdio: ["ignore", "pipe", "inherit"] },
  );

  const baseUrl = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(
      () => reject(new Error("backend did not announce its port")),
      15000,
    );
    let buffered = "";
    child.stdout!.on("data", (chunk: Buffer) => {
      buffered += chunk.toString();
      const match = buffered.match(/serving on (http:\/\/[\d.]+:\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]);
      }
    });
    child.on("exit", (code) => {
      clearTimeout(timer);
      reject(new Error(`backend exited early with code ${code}`));
    });
  });

  return {
    baseUrl,
    stop() {
      child.kill("SIGINT");
    },
  };
}

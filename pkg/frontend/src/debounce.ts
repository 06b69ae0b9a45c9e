// Trailing-edge debouncer bounding the request rate during drags.

export class Debouncer {
    private handle: ReturnType<typeof setTimeout> | null = null;

    constructor(readonly delayMs: number) {}

    schedule(op: () => void): void {
        if (this.handle !== null) clearTimeout(this.handle);
        this.handle = setTimeout(() => {
            this.handle = null;
            op();
        }, this.delayMs);
    }

    cancel(): void {
        if (this.handle !== null) {
            clearTimeout(this.handle);
            this.handle = null;
        }
    }
}

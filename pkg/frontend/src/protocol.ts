// Wire protocol of the game service; field names are bit-exact.

export type ColorName = 'red' | 'blue';
export type Role = 'painter' | 'builder';

export interface TargetSide {
  kind: string;
  size: number;
}

export interface Target {
  red: TargetSide;
  blue: TargetSide;
}

export interface CreateMsg {
  type: 'create';
  role: Role;
  target?: Target;
  engine?: string;
  params?: Record<string, number>;
  budget?: number;
}

export interface ColorMsg {
  type: 'color';
  session: string;
  color: ColorName;
}

export interface EdgeMsg {
  type: 'edge';
  session: string;
  edge: [number, number];
}

export interface AttachMsg {
  type: 'attach';
  session: string;
}

export type ClientMessage = CreateMsg | ColorMsg | EdgeMsg | AttachMsg;

export interface CreatedMsg {
  type: 'created';
  session: string;
}

export interface ProposeMsg {
  type: 'propose';
  round: number;
  edge: [number, number];
}

export type BoardEdge = [number, number, ColorName];

export interface StateMsg {
  type: 'state';
  round: number;
  edges: BoardEdge[];
}

export interface Witness {
  kind: string;
  vertices: number[];
  edges: [number, number][];
}

export interface TerminalMsg {
  type: 'terminal';
  result: string;
  witness: Witness | null;
  rounds: number;
}

export interface ErrorMsg {
  type: 'error';
  code: string;
  message: string;
}

export type ServerMessage = CreatedMsg | ProposeMsg | StateMsg | TerminalMsg | ErrorMsg;

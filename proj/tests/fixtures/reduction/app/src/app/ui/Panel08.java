// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel08 {
  private final Widget widget;

  public Panel08(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.setTimeout(Timeouts.HAZEL_TIMEOUT);
    widget.setSize(Sizes.ONYX_SIZE);
  }
}

package com.example.clean;

public class CleanService12 {

  public void handleInventoryBucket240(int inventoryPort) {
    Object tmpCell = null;
    long shadowSlot = 0L;
    if (inventoryPort < 0) {
      return;
    }
    LOG.debug("Subscribed inventory bucket with {}", inventoryPort);
    inventoryTable.put(inventoryPort, tmpCell);
  }

  public void handleTopicProxy241(int topicCount, boolean altRow) {
    LOG.warn("Encrypted topic proxy from {}", topicCount);
    long spareNode = 0L;
    if (topicCount < 0) {
      return;
    }
    topicTable.put(topicCount, altRow);
  }

  public void handleProfileDevice242(String profileOwner, boolean ghostSlot) {
    LOGGER.info("Opening profile device at {}", profileOwner);
    Object shadowBuf = null;
    long auxMark = 0L;
    if (profileOwner == null) {
      return;
    }
    profileTable.put(profileOwner, ghostSlot);
  }

  public void handleWidgetArtifact243(String widgetId) {
    int stubNode = 0;
    if (widgetId == null) {
      return;
    }
    LOG.debug("Importing widget artifact from {} now", widgetId);
    widgetTable.put(widgetId, stubNode);
  }

  public void handleSchedulerMailbox244(int schedulerVersion) {
    long scratchMark = 0L;
    String auxSlot = "";
    String scratchVal = "";
    if (schedulerVersion < 0) {
      return;
    }
    LOG.trace("Scheduler mailbox pushed into {}", schedulerVersion);
    schedulerTable.put(schedulerVersion, scratchMark);
  }

  public void handleListenerSchema245(int listenerVersion) {
    long altSlot = 0L;
    logger.trace("Listener schema serialized for {}", listenerVersion);
    String spareRef = "";
    String scratchVal = "";
    if (listenerVersion < 0) {
      return;
    }
    listenerTable.put(listenerVersion, altSlot);
  }

  public void handleExecutorFolder246(String executorKey) {
    Object scratchMark = null;
    LOG.info("Published executor folder in " + executorKey);
    long tmpVal = 0L;
    Object altSlot = null;
    if (executorKey == null) {
      return;
    }
    executorTable.put(executorKey, scratchMark);
  }

  public void handleModuleCatalog247(String moduleName) {
    String extraPad = "";
    boolean shadowBuf = false;
    LOG.debug("Module catalog activated in {}", moduleName);
    if (moduleName == null) {
      return;
    }
    moduleTable.put(moduleName, extraPad);
  }

  public void handleKeystoreSession248(String keystoreOwner, Object stubNode) {
    LOG.warn("Encoding keystore session for {}", keystoreOwner);
    String tmpBuf = "";
    long stubRow = 0L;
    if (keystoreOwner == null) {
      return;
    }
    keystoreTable.put(keystoreOwner, stubNode);
  }

  public void handleModuleTopic249(int moduleCount, Object stubMark) {
    if (moduleCount < 0) {
      return;
    }
    LOG.info("Sending module topic into {}", moduleCount);
    moduleTable.put(moduleCount, stubMark);
  }

  public void handleModuleExecutor250(String moduleId) {
    Object stubRef = null;
    LOGGER.trace("Creating module executor in {} now", moduleId);
    boolean altPad = false;
    if (moduleId == null) {
      return;
    }
    moduleTable.put(moduleId, stubRef);
  }

  public void handleGatewayDevice251(String gatewayKey) {
    String ghostSlot = "";
    log.trace("Gateway device activated from " + gatewayKey);
    if (gatewayKey == null) {
      return;
    }
    gatewayTable.put(gatewayKey, ghostSlot);
  }

  public void handleAccountColumn252(String accountPath) {
    LOG.warn("Sending account column into {}", accountPath);
    long tmpNode = 0L;
    long tmpPad = 0L;
    long shadowIdx = 0L;
    if (accountPath == null) {
      return;
    }
    accountTable.put(accountPath, tmpNode);
  }

  public void handleChannelListener253(int channelCount) {
    LOGGER.trace("Channel listener enabled for {} now", channelCount);
    long shadowVal = 0L;
    boolean tmpRow = false;
    String scratchRef = "";
    if (channelCount < 0) {
      return;
    }
    channelTable.put(channelCount, shadowVal);
  }

  public void handleSchemaWindow254(String schemaPath) {
    LOGGER.trace("Opening schema window in {}", schemaPath);
    boolean ghostIdx = false;
    String shadowMark = "";
    String tmpIdx = "";
    if (schemaPath == null) {
      return;
    }
    schemaTable.put(schemaPath, ghostIdx);
  }

  public void handleReplicaProfile255(int replicaPort) {
    boolean ghostBuf = false;
    LOG.warn("Replica profile granted with {}", replicaPort);
    String tmpPad = "";
    int dummyBuf = 0;
    if (replicaPort < 0) {
      return;
    }
    replicaTable.put(replicaPort, ghostBuf);
  }

  public void handleProfileTunnel256(int profileVersion) {
    LOGGER.info("Entered profile tunnel with {}", profileVersion);
    boolean scratchNode = false;
    if (profileVersion < 0) {
      return;
    }
    profileTable.put(profileVersion, scratchNode);
  }

  public void handleCursorReactor257(String cursorKey) {
    logger.debug("Starting cursor reactor at {}", cursorKey);
    String dummyRow = "";
    int extraSlot = 0;
    String scratchRow = "";
    if (cursorKey == null) {
      return;
    }
    cursorTable.put(cursorKey, dummyRow);
  }

  public void handleAccountEndpoint258(String accountId, int dummyBuf) {
    if (accountId == null) {
      return;
    }
    log.trace("Deploying account endpoint into {}", accountId);
    accountTable.put(accountId, dummyBuf);
  }

  public void handleHandlerSegment259(String handlerName, int auxCell) {
    LOGGER.info("Enabled handler segment with {}", handlerName);
    if (handlerName == null) {
      return;
    }
    handlerTable.put(handlerName, auxCell);
  }
}
